#include <string>

#include "doctest.h"
#include "hforge/abelian.hpp"
#include "hforge/assembly.hpp"
#include "hforge/builders.hpp"
#include "hforge/catalog.hpp"
#include "hforge/checks.hpp"
#include "hforge/error.hpp"
#include "hforge/expr.hpp"
#include "hforge/fixture.hpp"
#include "hforge/structure.hpp"
#include "oracles.hpp"

using namespace hforge;

namespace {

const std::string kFixtures = std::string(HFORGE_DATA_DIR) + "/fixtures";

bool is_ds(const RingElement& d) { return oracle::is_hadamard_difference_set(d.group(), minus_one_positions(d)); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

RingElement bruck_in(const FiniteGroup& g, const std::vector<Element>& basis) {
  ElementSet s{0};
  for (Element b : basis) s.push_back(b);
  Element all = 0;
  for (Element b : basis) all = g.mul(all, b);
  s.push_back(all);
  return RingElement::from_subset(g, make_set(s));
}

}  // namespace

TEST_SUITE("assembly") {

TEST_CASE("Drisko representatives on the modular group of order 16") {
  FiniteGroup g = modular(16);
  const Element x4 = parse_element(g, "x^4"), y = *g.generator("y");
  ElemAbelianEmbedding e = make_elem_abelian_embedding(g, {x4, y});
  DriskoInstance inst = make_drisko_instance(g, e.elements, e);
  for (const auto& act : inst.action) CHECK(act[0] == 0);
  std::vector<Element> reps = drisko_coset_reps(inst);
  CHECK(reps[CharacterIndex::parse("00").bits] == 0);
  CHECK(reps[CharacterIndex::parse("10").bits] == parse_element(g, "x"));
  CHECK(reps[CharacterIndex::parse("01").bits] == parse_element(g, "x^2"));
  CHECK(reps[CharacterIndex::parse("11").bits] == parse_element(g, "x^3"));

  // {g_u chi_u g_u^-1} = {chi_u}
  std::vector<std::uint32_t> seen;
  for (const auto& u : all_characters(2)) {
    RingElement c = character_element(e, u);
    RingElement conj(g);
    for (Element h = 0; h < g.order(); ++h) conj.set(conjugate(g, reps[u.bits], h), c[h]);
    auto v = find_character(e, conj);
    REQUIRE(v);
    seen.push_back(v->bits);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<std::uint32_t>{0, 1, 2, 3});

  RingElement d = assemble_prehadamard(g, e.elements, e, std::vector<RingElement>(4, RingElement::one(g)));
  CHECK(d == parse_ring_expression(g, "(1+x^4)(1+y) + x^2(1+x^4)(1-y) + x(1-x^4)(1+y) + x^3(1-x^4)(1-y)"));
  CHECK(is_ds(d));
}

TEST_CASE("C8^2 from the C4^2 set on <x^2, y^2>") {
  FiniteGroup g = abelian_group(AbelianGroup({8, 8}));
  ElemAbelianEmbedding e = make_elem_abelian_embedding(g, {parse_element(g, "x^4"), parse_element(g, "y^4")});
  ElementSet k = subgroup_generated(g, {parse_element(g, "x^2"), parse_element(g, "y^2")});
  std::vector<RingElement> blocks(3, parse_ring_expression(g, "1+x^2+y^2-x^2y^2"));
  blocks.push_back(parse_ring_expression(g, "1+x^2+y^2+x^2y^2"));
  auto inst = make_drisko_instance(g, k, e);
  std::vector<Element> reps = drisko_coset_reps(inst);
  CHECK(reps == std::vector<Element>{0, *g.generator("x"), *g.generator("y"), parse_element(g, "xy")});
  RingElement d = assemble_prehadamard(g, k, e, blocks);
  CHECK(d * involution(d) == RingElement::basis(g, 0, 64));
  CHECK(is_ds(d));
  CHECK(verify_hadamard_ds(complement_ds(d)).params->k == 36);
}

TEST_CASE("signature sets carried into a larger group") {
  SignatureSet s = abelian_signature_set(2, {4, 4});
  FiniteGroup g = abelian_group(AbelianGroup({8, 8}));
  GroupMap emb{s.carrier, g, {}};
  for (Element a = 0; a < s.carrier.order(); ++a) {
    Exponents ex = AbelianGroup({4, 4}).exponents(a);
    emb.images.push_back(AbelianGroup({8, 8}).index({2 * ex[0], 2 * ex[1]}));
  }
  check_homomorphism(emb);
  CHECK(is_ds(assemble_prehadamard(g, s, emb)));
  GroupMap not_normal_index{s.carrier, g, std::vector<Element>(s.carrier.order(), 0)};
  CHECK_THROWS_AS(assemble_prehadamard(g, s, not_normal_index), Error);
}

TEST_CASE("McFarland") {
  CHECK(verify_hadamard_ds(mcfarland_construct(cyclic(2)).d).params->v == 4);
  McFarlandResult c4 = mcfarland_construct(cyclic(4));
  CHECK(c4.group.order() == 16);
  CHECK(is_ds(c4.d));
  McFarlandResult q = mcfarland_construct(quaternion8());
  CHECK(q.group.order() == 64);
  CHECK(verify_hadamard_ds(q.d).valid);
  CHECK_THROWS_AS(mcfarland_construct(cyclic(3)), Error);
}

TEST_CASE("ternary-array products on order 16") {
  std::size_t found = 0;
  for (const auto& c : builtin_order16_catalog()) {
    CAPTURE(c.id);
    PtaProductResult r = pta_product_search(c.group);
    const bool excluded = exclusion_witness(c.group).has_value();
    CHECK(r.product.has_value() == !excluded);
    if (!r.product) {
      CHECK(r.complete);
      continue;
    }
    ++found;
    CHECK(r.product->factors.size() == 2);
    for (const auto& f : r.product->factors) CHECK(is_pta(mod2_element(c.group, f.x, f.y), 2));
    CHECK(r.product->d == pta_product(c.group, r.product->factors));
    CHECK(is_ds(r.product->d));
  }
  CHECK(found == 12);
  PtaProductResult c43 = pta_product_search(abelian_group(AbelianGroup({4, 4, 4})));
  REQUIRE(c43.product);
  CHECK(is_ds(c43.product->d));
}

TEST_CASE("index-2 assembly from a ternary-array set") {
  FiniteGroup k32 = abelian_group(AbelianGroup({4, 4, 2}));
  FiniteGroup g = direct_product(k32, cyclic(2, "t"));
  ElementSet kset;
  for (Element a = 0; a < 32; ++a) kset.push_back(a);
  Subgroup k = subgroup_as_group(g, kset);
  auto s = pta_search_for_signature(k.group, *k.group.find_label("z"));
  REQUIRE(s);
  CHECK(is_ds(cor_pta_ss_assemble(g, k, *s)));
}

TEST_CASE("stored final-group data") {
  auto fixtures = load_fixture_dir(kFixtures);
  REQUIRE(fixtures.size() == 2);
  for (const auto& f : fixtures) {
    CAPTURE(f.name);
    FinalConditions fc = final_conditions(f.group, f.central(), f.d0(), f.d1());
    CHECK(fc.d0_pta);
    CHECK(fc.d1_identity);
    CHECK(fc.support_partition);
    WeakConditions w = weak_conditions(f);
    CHECK(w.principal_pair);
    CHECK(w.complementary_pair);
    RingElement d = fixture_difference_set(f);
    CHECK(d * involution(d) == RingElement::basis(f.group, 0, static_cast<Coeff>(f.group.order())));
    CHECK(d == modified_signature_assemble(f.group, f.e, f.blocks));
    RingElement g = RingElement::basis(f.group, f.central());
    RingElement one = RingElement::one(f.group);
    REQUIRE(f.stated_supports.size() == 2);
    CHECK(support(f.d0() * (one + g)) == support(f.stated_supports[0]));
    CHECK(support(f.d1() * (one - g)) == support(f.stated_supports[1]));
  }
  const FinalFixture& m64 = fixtures[0];
  CHECK(m64.group.order() == 64);
  RingElement d = fixture_difference_set(m64);
  CHECK(verify_hadamard_ds(complement_ds(d)).params->k == 28);
  CHECK(verify_hadamard_ds(complement_ds(d)).params->lambda == 12);
  CHECK(center(m64.group) == subgroup_generated(m64.group, {parse_element(m64.group, "x^2")}));
  const FinalFixture& y256 = fixtures[1];
  CHECK(y256.group.order() == 256);
  CHECK(y256.id == "256,536");
  CHECK(is_hadamard_ds(fixture_difference_set(y256)));
}

TEST_CASE("final assembly error paths") {
  FinalFixture f = load_fixture(kFixtures + "/m64.txt");
  CHECK(code_of([&] { original_final_assemble(f.group, f.central(), f.d1(), f.d1()); }) == Errc::pta_failure);
  CHECK(code_of([&] { original_final_assemble(f.group, *f.group.generator("x"), f.d0(), f.d1()); }) ==
        Errc::precondition);
  RingElement bad_d1 = f.d1();
  bad_d1 = -bad_d1;
  auto fc = final_conditions(f.group, f.central(), f.d0(), bad_d1);
  CHECK(fc.d1_identity);
  std::vector<RingElement> blocks = f.blocks;
  blocks[1] = blocks[0];
  CHECK(code_of([&] { modified_signature_assemble(f.group, f.e, blocks); }) == Errc::support_failure);
  FiniteGroup c22 = elementary_abelian(2);
  ElemAbelianEmbedding e = make_elem_abelian_embedding(c22, {1, 2});
  std::vector<RingElement> triv{RingElement::one(c22), RingElement::zero(c22), RingElement::zero(c22),
                                RingElement::zero(c22)};
  // one block on the single coset: D = chi_00, which fails the summed identity
  CHECK(code_of([&] { modified_signature_assemble(c22, e, triv); }) == Errc::verification);
}

TEST_CASE("trivial modified-signature case") {
  FiniteGroup c22 = elementary_abelian(2);
  const Element x = *c22.generator("x"), y = *c22.generator("y");
  ElemAbelianEmbedding e = make_elem_abelian_embedding(c22, {x});
  std::vector<RingElement> blocks{RingElement::one(c22), RingElement::basis(c22, y, -1)};
  RingElement d = modified_signature_assemble(c22, e, blocks);
  CHECK(d == parse_ring_expression(c22, "1+x-y+xy"));
  CHECK(verify_hadamard_ds(d).params->k == 1);
}

TEST_CASE("product of two Bruck sets") {
  FiniteGroup e4 = elementary_abelian(4);
  FiniteGroup g = direct_product(e4, elementary_abelian(4));
  ElementSet h1, h2;
  for (Element a = 0; a < 16; ++a) {
    h1.push_back(a);
    h2.push_back(16 * a);
  }
  RingElement d1 = bruck_in(g, {1, 2, 4, 8});
  RingElement d2 = bruck_in(g, {16, 32, 64, 128});
  auto restrict_to = [&](RingElement d, const ElementSet& h) {
    for (Element x = 0; x < g.order(); ++x) {
      if (!std::binary_search(h.begin(), h.end(), x)) d.set(x, 0);
    }
    return d;
  };
  RingElement d = dillon_product(g, h1, h2, restrict_to(d1, h1), restrict_to(d2, h2));
  CHECK(verify_hadamard_ds(d).params->v == 256);
  CHECK_THROWS_AS(dillon_product(g, h1, h1, restrict_to(d1, h1), restrict_to(d1, h1)), Error);
  FiniteGroup c2sq = direct_product(e4, cyclic(1));
  RingElement one16 = RingElement::one(c2sq);
  RingElement bruck = bruck_in(c2sq, {1, 2, 4, 8});
  CHECK(dillon_product(c2sq, whole_group(c2sq), {0}, bruck, one16) == bruck);
}

TEST_CASE("identity transfer returns the original set") {
  FiniteGroup g = abelian_group(AbelianGroup({4, 4}));
  PtaProductResult r = pta_product_search(g);
  REQUIRE(r.product);
  ElementSet k = subgroup_generated(g, {*g.generator("x")});
  Decomposition dec = decompose(r.product->d, k);
  TransferResult t = transfer_search(dec, g, dec.k, identity_map(dec.k.group));
  REQUIRE(t.d);
  CHECK(*t.d == r.product->d);
}

TEST_CASE("transfer from C4 x C4 along K = C4") {
  FiniteGroup g = abelian_group(AbelianGroup({4, 4}));
  PtaProductResult r = pta_product_search(g);
  REQUIRE(r.product);
  ElementSet k = subgroup_generated(g, {*g.generator("x")});
  Decomposition dec = decompose(r.product->d, k);
  std::size_t transferred = 0;
  for (const auto& c : builtin_order16_catalog()) {
    if (c.id == "C4xC4") continue;
    for (Element a = 0; a < c.group.order(); ++a) {
      if (element_order(c.group, a) != 4) continue;
      ElementSet kp = subgroup_generated(c.group, {a});
      if (!is_normal(c.group, kp)) continue;
      Subgroup kps = subgroup_as_group(c.group, kp);
      auto iso = find_isomorphism_by_generators(dec.k.group, kps.group);
      REQUIRE(iso);
      TransferResult t = transfer_search(dec, c.group, kps, *iso, {200'000});
      if (t.d) {
        CHECK(is_ds(*t.d));
        ++transferred;
      } else {
        CHECK(t.nodes > 0);
      }
      break;
    }
  }
  CHECK(transferred >= 1);
}

}  // TEST_SUITE
