#include <algorithm>
#include <random>

#include "doctest.h"
#include "hforge/abelian.hpp"
#include "hforge/builders.hpp"
#include "hforge/catalog.hpp"
#include "hforge/characters.hpp"
#include "hforge/checks.hpp"
#include "hforge/error.hpp"
#include "hforge/expr.hpp"
#include "hforge/pta.hpp"
#include "hforge/structure.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace hforge;

namespace {

ElementSet bruck(const FiniteGroup& e4) {
  std::vector<Element> s;
  for (const char* w : {"1", "x1", "x2", "x3", "x4", "x1x2x3x4"}) s.push_back(parse_element(e4, w));
  return make_set(s);
}

}  // namespace

TEST_SUITE("design-checks") {

TEST_CASE("parameter table") {
  CHECK(hadamard_params(1) == HadamardParams{1, 2, 16, 6, 2, 4});
  CHECK(hadamard_params(2) == HadamardParams{2, 4, 64, 28, 12, 16});
  CHECK(hadamard_params(3) == HadamardParams{3, 8, 256, 120, 56, 64});
  CHECK(complement_params(hadamard_params(1)) == HadamardParams{1, -2, 16, 10, 6, 4});
  CHECK(hadamard_d(16) == 1);
  CHECK(hadamard_d(256) == 3);
  CHECK_FALSE(hadamard_d(32).has_value());
}

TEST_CASE("Bruck set in C2^4") {
  FiniteGroup g = elementary_abelian(4);
  ElementSet d = bruck(g);
  RingElement pm = RingElement::from_subset(g, d);
  CHECK(pm * involution(pm) == RingElement::basis(g, 0, 16));
  DsVerdict v = verify_hadamard_ds(pm);
  CHECK(v.valid);
  REQUIRE(v.params);
  CHECK(v.params->v == 16);
  CHECK(v.params->k == 6);
  CHECK(v.params->lambda == 2);
  CHECK(subset_identity_holds(g, d));
  DsVerdict c = verify_hadamard_ds(complement_ds(pm));
  CHECK(c.valid);
  CHECK(c.params->k == 10);
  CHECK(c.params->lambda == 6);
  CHECK(oracle::is_hadamard_difference_set(g, d));
}

TEST_CASE("failure reasons") {
  FiniteGroup g = elementary_abelian(4);
  CHECK(verify_hadamard_ds(RingElement::from_subset(g, {0, 1})).failure == DsFailure::autocorrelation);
  CHECK(verify_hadamard_ds(RingElement::one(g)).failure == DsFailure::not_pm1);
  CHECK(verify_hadamard_ds(RingElement::from_subset(cyclic(8), {0})).failure == DsFailure::wrong_order);
}

TEST_CASE("agreement with the difference-multiset oracle") {
  std::mt19937_64 rng(2024);
  for (const auto& c : builtin_order16_catalog()) {
    for (int t = 0; t < 500; ++t) {
      std::size_t k = (t % 2) ? 6 : 10;
      if (t % 5 == 0) k = 1 + rng() % 15;
      ElementSet s = oracle::random_subset(rng, 16, k);
      CHECK(is_hadamard_ds(c.group, s) == oracle::is_hadamard_difference_set(c.group, s));
      CHECK(subset_identity_holds(c.group, s) == is_hadamard_ds(c.group, s));
    }
  }
}

TEST_CASE("exclusion agrees with brute force on order 16") {
  std::vector<std::string> excluded;
  for (const auto& c : builtin_order16_catalog()) {
    bool ex = exclusion_witness(c.group).has_value();
    CHECK_MESSAGE(ex == oracle::excluded(c.group, 1), c.id);
    if (ex) excluded.push_back(c.id);
  }
  CHECK(excluded == std::vector<std::string>{"C16", "D16"});
  CHECK(turyn_excluded(cyclic(16)));
  CHECK(dillon_excluded(dihedral(16)));
  CHECK_FALSE(turyn_excluded(dihedral(16)));
  CHECK_THROWS_AS(exclusion_witness(cyclic(32)), Error);
}

TEST_CASE("exponent bound for abelian groups") {
  CHECK(turyn_exponent_check(abelian_group(AbelianGroup({8, 2}))));
  CHECK_FALSE(turyn_exponent_check(cyclic(16)));
  CHECK(turyn_exponent_check(abelian_group(AbelianGroup({16, 4}))));
  CHECK_FALSE(turyn_exponent_check(abelian_group(AbelianGroup({32, 2}))));
  CHECK_THROWS_AS(turyn_exponent_check(dihedral(16)), Error);
}

TEST_CASE("modulus-2 arrays") {
  FiniteGroup c4 = abelian_group(AbelianGroup({2, 2}));
  RingElement t = mod2_element(c4, *c4.generator("x"), *c4.generator("y"));
  CHECK(is_pta(t, 2));
  CHECK_FALSE(is_pta(t, 3));
  FiniteGroup q = quaternion8();
  RingElement tq = mod2_element(q, *q.generator("x"), *q.generator("y"));
  CHECK(is_pta(tq, 2));
  CHECK_THROWS_AS(make_ternary_array(RingElement::basis(c4, 0, 2), 2), Error);
  for (const auto& cand : mod2_pta_candidates(semidihedral(16))) {
    CHECK(is_pta(mod2_element(semidihedral(16), cand.x, cand.y), 2));
    CHECK(cand.support.size() == 4);
  }
}

TEST_CASE("signature block predicate") {
  FiniteGroup q = quaternion8();
  const Element x = *q.generator("x"), y = *q.generator("y");
  ElemAbelianEmbedding e = make_elem_abelian_embedding(q, {q.mul(x, x)});
  RingElement a = mod2_element(q, x, y);
  CHECK(is_signature_block(q, e, CharacterIndex{0, 1}, a));
  CHECK(is_signature_block(q, e, CharacterIndex{1, 1}, a));
  CHECK(is_transversal_support(a, e));
  CHECK_FALSE(is_signature_block(q, e, CharacterIndex{0, 1}, RingElement::one(q)));
  FiniteGroup d8 = dihedral(8);
  ElemAbelianEmbedding bad = make_elem_abelian_embedding(d8, {*d8.generator("y")});
  CHECK_THROWS_AS(is_signature_block(d8, bad, CharacterIndex{0, 1}, RingElement::one(d8)), Error);
}

}  // TEST_SUITE

TEST_SUITE("characters") {

TEST_CASE("character elements are the expanded products") {
  FiniteGroup g = elementary_abelian(3);
  std::vector<Element> basis;
  for (const auto& gen : g.generators()) basis.push_back(gen.element);
  ElemAbelianEmbedding e = make_elem_abelian_embedding(g, basis);
  for (const auto& u : all_characters(3)) {
    RingElement prod = RingElement::one(g);
    for (std::size_t i = 0; i < 3; ++i) {
      prod = oracle::multiply(prod, RingElement::one(g) + RingElement::basis(g, basis[i], u.bit(i) ? -1 : 1));
    }
    CHECK(character_element(e, u) == prod);
    CHECK(find_character(e, prod) == u);
  }
}

TEST_CASE("index text form") {
  CharacterIndex u = CharacterIndex::parse("10");
  CHECK(u.bits == 1);
  CHECK(u.to_string() == "10");
  CHECK(CharacterIndex::parse("011").bits == 6);
  CHECK(concat(CharacterIndex::parse("1"), CharacterIndex::parse("01")).to_string() == "101");
  CHECK_THROWS_AS(CharacterIndex::parse("12"), Error);
}

TEST_CASE("embedding validation") {
  FiniteGroup g = cyclic(4);
  CHECK_THROWS_AS(make_elem_abelian_embedding(g, {1}), Error);
  FiniteGroup e2 = elementary_abelian(2);
  CHECK_THROWS_AS(make_elem_abelian_embedding(e2, {1, 1}), Error);
  FiniteGroup d8 = dihedral(8);
  CHECK_THROWS_AS(make_elem_abelian_embedding(d8, {*d8.generator("y"), d8.mul(*d8.generator("x"), *d8.generator("y"))}),
                  Error);
}

}  // TEST_SUITE

TEST_SUITE("characters") {

TEST_CASE("orthogonality for every elementary abelian subgroup of rank <= 4") {
  std::vector<FiniteGroup> groups{elementary_abelian(4), abelian_group(AbelianGroup({4, 4})),
                                  direct_product(dihedral(8), cyclic(2, "z")),
                                  direct_product(quaternion8(), cyclic(2, "z")), modular(16),
                                  direct_product(elementary_abelian(4), cyclic(4, "w"))};
  std::size_t checked = 0;
  for (const auto& g : groups) {
    for (auto basis : props::elementary_abelian_bases(g, 4)) {
      std::sort(basis.begin(), basis.end());
      do {
        CHECK(props::orthogonality_holds(make_elem_abelian_embedding(g, basis)));
        ++checked;
      } while (std::next_permutation(basis.begin(), basis.end()) && basis.size() <= 3);
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("characters of C2^2") {
  FiniteGroup g = elementary_abelian(2);
  ElemAbelianEmbedding e = make_elem_abelian_embedding(g, {1, 2});
  CHECK(to_expression(character_element(e, CharacterIndex::parse("01"))) == to_expression(parse_ring_expression(g, "1+x-y-xy")));
  CHECK(character_element(e, CharacterIndex::parse("11")) == parse_ring_expression(g, "1-x-y+xy"));
  CHECK(character_element(e, CharacterIndex::parse("00")) == RingElement::sum_of(g, whole_group(g)));
}

}  // TEST_SUITE
