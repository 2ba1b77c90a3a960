#include <sstream>

#include "doctest.h"
#include "hforge/abelian.hpp"
#include "hforge/builders.hpp"
#include "hforge/catalog.hpp"
#include "hforge/error.hpp"
#include "hforge/expr.hpp"
#include "hforge/structure.hpp"
#include "oracles.hpp"

using namespace hforge;

TEST_SUITE("group-core") {

TEST_CASE("cyclic and abelian tables") {
  FiniteGroup c = cyclic(8);
  CHECK(c.order() == 8);
  CHECK(c.element_order(1) == 8);
  CHECK(c.pow(1, 8) == 0);
  CHECK(c.pow(3, -1) == 5);
  FiniteGroup a = abelian_group(AbelianGroup({4, 2}));
  CHECK(a.order() == 8);
  CHECK(is_abelian(a));
  CHECK(abelian_invariants(a) == std::vector<std::size_t>{4, 2});
  CHECK(abelian_invariants(elementary_abelian(3)) == std::vector<std::size_t>{2, 2, 2});
  CHECK(abelian_invariants(direct_product(cyclic(4), cyclic(8))) == std::vector<std::size_t>{8, 4});
}

TEST_CASE("named families") {
  CHECK(is_dihedral(dihedral(16)));
  CHECK_FALSE(is_dihedral(quaternion8()));
  CHECK_FALSE(is_abelian(generalized_quaternion(16)));
  FiniteGroup q = quaternion8();
  std::size_t involutions = 0;
  for (Element x = 0; x < 8; ++x) involutions += q.element_order(x) == 2;
  CHECK(involutions == 1);
  CHECK(exponent(semidihedral(16)) == 8);
  CHECK(center(modular(16)).size() == 4);
}

TEST_CASE("modular group of order 64 has center <x^2>") {
  FiniteGroup m = semidirect_cyclic(32, 2, 17);
  ElementSet z = center(m);
  CHECK(z == subgroup_generated(m, {parse_element(m, "x^2")}));
  CHECK(contains(z, parse_element(m, "x^16")));
}

TEST_CASE("C64 x|_47 C4 has center <x^32>") {
  FiniteGroup g = semidirect_cyclic(64, 4, 47);
  CHECK(g.order() == 256);
  CHECK(center(g) == subgroup_generated(g, {parse_element(g, "x^32")}));
}

TEST_CASE("metacyclic rejects bad parameters") {
  CHECK_THROWS_AS(semidirect_cyclic(8, 2, 2), Error);
  CHECK_THROWS_AS(metacyclic(8, 2, 7, 1), Error);
}

TEST_CASE("non-Latin table names the row") {
  std::vector<Element> t{0, 1, 1, 1};
  try {
    FiniteGroup g(2, t);
    FAIL("accepted a bad table");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::group_axiom);
    CHECK(std::string(e.what()).find("row 1") != std::string::npos);
  }
}

TEST_CASE("non-associative Latin square is rejected") {
  // Latin square with identity 0 that is not a group (order 5 loop)
  std::vector<Element> t{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup(5, t), Error);
}

TEST_CASE("named generators must generate") {
  FiniteGroup c4 = cyclic(4);
  std::vector<Element> t(c4.table().begin(), c4.table().end());
  CHECK_THROWS_AS(FiniteGroup(4, t, {}, {{"a", 2}}), Error);
}

TEST_CASE("subgroup predicates agree with brute force on order 16") {
  for (const auto& c : builtin_order16_catalog()) {
    auto subs = oracle::all_subgroups(c.group);
    std::size_t normal = 0, index2 = 0;
    for (const auto& s : subs) {
      CHECK(is_subgroup(c.group, s));
      bool n = oracle::is_normal(c.group, s);
      CHECK(is_normal(c.group, s) == n);
      normal += n && s.size() <= 8;
      index2 += s.size() == 8;
    }
    CHECK(find_normal_subgroups_up_to(c.group, 8).size() == normal);
    auto idx2 = index_two_subgroups(c.group);
    CHECK(idx2.size() == index2);
    for (const auto& k : idx2) CHECK(std::find(subs.begin(), subs.end(), k) != subs.end());
  }
}

TEST_CASE("normal abelian subgroup search agrees with brute force") {
  for (const auto& c : builtin_order16_catalog()) {
    for (std::vector<std::size_t> inv : {std::vector<std::size_t>{2, 2}, {4}, {4, 2}, {2, 2, 2}}) {
      bool expected = false;
      for (const auto& s : oracle::all_subgroups(c.group)) {
        if (!oracle::is_normal(c.group, s)) continue;
        if (!is_abelian(c.group, s)) continue;
        if (abelian_invariants(c.group, s) == inv) expected = true;
      }
      auto found = find_normal_abelian_subgroup(c.group, inv);
      CHECK_MESSAGE(found.has_value() == expected, c.id);
      if (found) {
        CHECK(is_normal(c.group, found->elements));
        CHECK(abelian_invariants(c.group, found->elements) == inv);
        check_homomorphism(found->embedding);
        CHECK(found->embedding.is_injective());
      }
    }
  }
}

TEST_CASE("quotient by a central subgroup") {
  FiniteGroup d8 = dihedral(8);
  Quotient q = quotient(d8, center(d8));
  CHECK(q.group.order() == 4);
  CHECK(is_abelian(q.group));
  CHECK(abelian_invariants(q.group) == std::vector<std::size_t>{2, 2});
  check_homomorphism(q.projection);
  CHECK_THROWS_AS(quotient(d8, subgroup_generated(d8, {*d8.generator("y")})), Error);
}

TEST_CASE("coset representatives are minimal and start at the identity") {
  FiniteGroup m = modular(16);
  ElementSet k = subgroup_generated(m, {parse_element(m, "x^4"), parse_element(m, "y")});
  auto reps = coset_representatives(m, k);
  REQUIRE(reps.size() == 4);
  CHECK(reps[0] == 0);
  auto idx = coset_index(m, k);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CHECK(idx[reps[i]] == i);
    for (Element x = 0; x < m.order(); ++x) {
      if (idx[x] == i) CHECK(x >= reps[i]);
    }
  }
}

TEST_CASE("built-in order-16 catalog") {
  auto cat = builtin_order16_catalog();
  REQUIRE(cat.size() == 14);
  std::set<std::vector<std::size_t>> prints;
  std::set<std::string> ids;
  for (const auto& c : cat) {
    CHECK(c.group.order() == 16);
    prints.insert(structure_fingerprint(c.group));
    ids.insert(c.id);
  }
  CHECK(ids.size() == 14);
  CHECK(prints.size() == 14);
  std::size_t abelian = 0;
  for (const auto& c : cat) abelian += is_abelian(c.group);
  CHECK(abelian == 5);
}

TEST_CASE("catalog text round trip") {
  auto cat = builtin_order16_catalog();
  std::stringstream s;
  write_catalog(s, cat);
  auto back = parse_catalog(s);
  REQUIRE(back.size() == cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CHECK(back[i].id == cat[i].id);
    CHECK(std::equal(back[i].group.table().begin(), back[i].group.table().end(), cat[i].group.table().begin()));
    CHECK(back[i].group.label(3) == cat[i].group.label(3));
  }
}

TEST_CASE("catalog errors") {
  std::istringstream dup("group a\norder 1\ntable\n0\nend\ngroup a\norder 1\ntable\n0\nend\n");
  CHECK_THROWS_AS(parse_catalog(dup), Error);
  std::istringstream nonlatin("group b\norder 2\ntable\n0 1\n1 1\nend\n");
  try {
    parse_catalog(nonlatin);
    FAIL("accepted a non-Latin table");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::group_axiom);
    CHECK(std::string(e.what()).find("row 1") != std::string::npos);
  }
  std::istringstream shortrow("group c\norder 2\ntable\n0 1\n1\nend\n");
  CHECK_THROWS_AS(parse_catalog(shortrow), Error);
  std::istringstream junk("grop c\n");
  CHECK_THROWS_AS(parse_catalog(junk), Error);
}

TEST_CASE("ingested catalogs") {
  auto c16 = import_catalog(HFORGE_DATA_DIR "/catalog16.txt");
  CHECK(c16.size() == 14);
  auto c32 = import_catalog(HFORGE_DATA_DIR "/catalog32.txt");
  CHECK(c32.size() == 51);
  // the ingested and built-in order-16 lists describe the same groups
  std::multiset<std::vector<std::size_t>> a, b;
  for (const auto& c : c16) a.insert(structure_fingerprint(c.group));
  for (const auto& c : builtin_order16_catalog()) b.insert(structure_fingerprint(c.group));
  CHECK(a == b);
}

TEST_CASE("isomorphism by generators") {
  auto iso = find_isomorphism_by_generators(modular(16), semidirect_cyclic(8, 2, 5));
  REQUIRE(iso.has_value());
  check_homomorphism(*iso);
  CHECK(iso->is_bijective());
  CHECK_FALSE(find_isomorphism_by_generators(dihedral(16), generalized_quaternion(16)).has_value());
}

TEST_CASE("group expressions") {
  CHECK(parse_group_expression("Q8xC2").order() == 16);
  CHECK(is_abelian(parse_group_expression("C4xC4")));
  CHECK(parse_group_expression("E4").order() == 16);
  CHECK(is_dihedral(parse_group_expression("D16")));
  CHECK(parse_group_expression("semidirect(32,2,17)").order() == 64);
  CHECK_THROWS_AS(parse_group_expression("C4 y"), Error);
}

}  // TEST_SUITE
