// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hforge/abelian.hpp"
#include "hforge/assembly.hpp"
#include "hforge/builders.hpp"
#include "hforge/catalog.hpp"
#include "hforge/characters.hpp"
#include "hforge/checks.hpp"
#include "hforge/classify.hpp"
#include "hforge/expr.hpp"
#include "hforge/fixture.hpp"
#include "hforge/signatures.hpp"
#include "hforge/structure.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace hforge;

namespace {

const std::string kData = HFORGE_DATA_DIR;

struct Outcome {
  bool pass = false;
  std::string detail;
  bool skipped = false;
};

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs <= limit_s;
  const char* tag = o.skipped ? "SKIP" : (o.pass && in_time ? "PASS" : "FAIL");
  if (!o.skipped && !(o.pass && in_time)) ++failures;
  std::printf("%s  %2d  %-34s %.3fs (limit %gs)  %s%s\n", tag, id, title, secs, limit_s, o.detail.c_str(),
              in_time ? "" : "  [over time limit]");
  std::fflush(stdout);
}

std::string str(std::size_t n) { return std::to_string(n); }

ElementSet bruck(const FiniteGroup& e4) {
  std::vector<Element> s;
  for (const char* w : {"1", "x1", "x2", "x3", "x4", "x1x2x3x4"}) s.push_back(parse_element(e4, w));
  return make_set(s);
}

bool same(const RingElement& a, const std::string& text) { return a == parse_ring_expression(a.group(), text); }

std::vector<SignatureSet> sweep_sets() {
  std::vector<SignatureSet> out;
  for (int d = 1; d <= 4; ++d) {
    for (const auto& t : valid_abelian_tuples(d)) out.push_back(abelian_signature_set(d, t));
  }
  return out;
}

}  // namespace

int main() {
  // 1
  run(1, "Bruck set and complement", 0.001, [] {
    FiniteGroup g = elementary_abelian(4);
    ElementSet s = bruck(g);
    const auto t0 = std::chrono::steady_clock::now();
    RingElement d = RingElement::from_subset(g, s);
    const bool auto_ok = d * involution(d) == RingElement::basis(g, 0, 16);
    DsVerdict v = verify_hadamard_ds(d);
    DsVerdict c = verify_hadamard_ds(complement_ds(d));
    const double us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = auto_ok && v.valid && v.params->k == 6 && v.params->lambda == 2 && c.valid &&
                    c.params->k == 10 && c.params->lambda == 6;
    return Outcome{ok, "(16,6,2) and (16,10,6), check " + std::to_string(static_cast<int>(us)) + "us"};
  });

  // 2
  run(2, "character orthogonality r<=4", 1.0, [] {
    std::vector<FiniteGroup> groups;
    for (const auto& c : builtin_order16_catalog()) groups.push_back(c.group);
    groups.push_back(direct_product(elementary_abelian(4), cyclic(4, "w")));
    std::size_t embeddings = 0;
    bool ok = true;
    for (const auto& g : groups) {
      for (auto basis : props::elementary_abelian_bases(g, 4)) {
        std::sort(basis.begin(), basis.end());
        do {
          ok = ok && props::orthogonality_holds(make_elem_abelian_embedding(g, basis));
          ++embeddings;
        } while (std::next_permutation(basis.begin(), basis.end()));
      }
    }
    return Outcome{ok, str(embeddings) + " ordered bases"};
  });

  // 3
  run(3, "signature recursion goldens", 1.0, [] {
    SignatureSet a2 = abelian_signature_set(2, {4, 4});
    SignatureSet a3 = abelian_signature_set(3, {8, 8});
    SignatureSet a4 = abelian_signature_set(4, {8, 4, 4});
    auto b = [](const SignatureSet& s, const char* u) { return s.block(CharacterIndex::parse(u)); };
    std::size_t matched = 0, total = 0;
    auto expect = [&](const SignatureSet& s, const char* u, const char* text) {
      ++total;
      if (same(b(s, u), text)) ++matched;
    };
    expect(a2, "00", "1+x+y-xy");
    expect(a2, "01", "1+x+y-xy");
    expect(a2, "10", "1+x+y-xy");
    expect(a2, "11", "1+x-x^2y+xy");
    expect(a3, "00", "(1+x^2)(1+x+y^2-x y^2) + y(1-x^2)(1+x+y^2- xy^2)");
    expect(a3, "01", "(1+x^2)(1+x+y^2-x y^2) + y(1-x^2)(1+x-x^2y^2+xy^2)");
    expect(a3, "10", "(1+y^2)(1+x^2+y-x^2y) + x(1-y^2)(1+x^2-x^4y+x^2y)");
    expect(a3, "11", "(1+x^2y^2)(1+x^2+xy-x^3y) + x(1-x^2y^2)(1+x^2-x^5y+x^3y)");
    expect(a4, "000", "(1+x^2)(1+x+z-x z) + y(1-x^2)(1+x+z-x z)");
    expect(a4, "001", "(1+x^2)(1+x+z-x z) + y(1-x^2)(1+x-x^2z+x z)");
    expect(a4, "010", "(1+x^2)(1+x+z-x z) + y(1-x^2)(1+x+z-x z)");
    expect(a4, "011", "(1+x^2)(1+x+z-x z) + y(1-x^2)(1+x-x^2z+x z)");
    expect(a4, "100", "(1+y)(1+x^2+z-x^2 z)+ x(1-y)(1+x^2+z-x^2 z)");
    expect(a4, "101", "(1+y)(1+x^2-x^4z+x^2 z)+ x(1-y)(1+x^2-x^4z+x^2 z)");
    expect(a4, "110", "(1+x^2y)(1+x^2+z-x^2 z) + x(1-x^2y)(1+x^2+z-x^2 z)");
    expect(a4, "111", "(1+x^2y)(1+x^2-x^4z+x^2 z) + x(1-x^2y)(1+x^2-x^4z+x^2 z)");
    return Outcome{matched == total, str(matched) + "/" + str(total) + " blocks exact"};
  });

  // 4 and 5 share the sweep
  std::vector<SignatureSet> sets;
  run(4, "signature sweep d<=4", 30.0, [&] {
    sets = sweep_sets();
    std::size_t good = 0, blocks = 0;
    for (const auto& s : sets) {
      bool ok = s.blocks.size() == (std::size_t{1} << s.rank());
      for (const auto& u : all_characters(s.rank())) {
        ok = ok && is_signature_block(s.carrier, s.subgroup, u, s.block(u));
        ++blocks;
      }
      if (ok) ++good;
    }
    return Outcome{good == sets.size() && !sets.empty(), str(good) + "/" + str(sets.size()) + " tuples, " +
                                                             str(blocks) + " blocks"};
  });

  run(5, "minus-one counts", 30.0, [&] {
    std::size_t good = 0;
    for (const auto& s : sets) good += props::minus_one_counts_hold(s);
    return Outcome{good == sets.size() && !sets.empty(), str(good) + "/" + str(sets.size()) + " sets"};
  });

  // 6
  run(6, "order 16 classification", 10.0, [] {
    auto recs = classify(builtin_order16_catalog(), ClassifyConfig{});
    StageCounts n = count_stages(recs);
    const bool ok = n.total == 14 && n.excluded == 2 && n.constructed == 12 && n.by_stage[2] == 10;
    return Outcome{ok, "excluded " + str(n.excluded) + ", constructed " + str(n.constructed) + " (main " +
                           str(n.by_stage[2]) + ")"};
  });

  // 7 and 11 share the order-64 records
  const std::string cat64_path = kData + "/catalog64.txt";
  const bool have64 = std::filesystem::exists(cat64_path);
  std::vector<CatalogGroup> cat64;
  std::vector<ConstructionRecord> recs64;
  std::vector<FinalFixture> fixtures = load_fixture_dir(kData + "/fixtures");
  run(7, "order 64 classification", 600.0, [&]() -> Outcome {
    if (!have64) return Outcome{false, "catalog64.txt not found, criterion skipped", true};
    cat64 = import_catalog(cat64_path);
    ClassifyConfig cfg;
    cfg.fixtures = fixtures;
    recs64 = classify(cat64, cfg);
    StageCounts n = count_stages(recs64);
    bool m64 = false;
    for (const auto& r : recs64) {
      if (r.group_id == "64,51") m64 = r.status == RecordStatus::constructed && r.method == Method::fixture;
    }
    const bool ok = cat64.size() == 267 && n.excluded == 8 && n.by_stage[2] == 237 && n.constructed >= 254 &&
                    n.unresolved <= 4 && m64;
    return Outcome{ok, "groups " + str(cat64.size()) + ", excluded " + str(n.excluded) + ", main " +
                           str(n.by_stage[2]) + ", stage 3+4 " + str(n.by_stage[3] + n.by_stage[4]) +
                           ", fixture " + str(n.by_stage[5]) + ", constructed " + str(n.constructed) +
                           ", unresolved " + str(n.unresolved)};
  });

  // 8
  run(8, "final-group fixtures", 5.0, [&] {
    std::size_t good = 0;
    for (const auto& f : fixtures) {
      FinalConditions fc = final_conditions(f.group, f.central(), f.d0(), f.d1());
      WeakConditions w = weak_conditions(f);
      RingElement d = fixture_difference_set(f);
      const bool end_to_end = d * involution(d) == RingElement::basis(f.group, 0, static_cast<Coeff>(f.group.order()));
      good += fc.d0_pta && fc.d1_identity && fc.support_partition && w.principal_pair && w.complementary_pair &&
              end_to_end;
    }
    std::string names;
    for (const auto& f : fixtures) names += (names.empty() ? "" : ", ") + f.name;
    return Outcome{fixtures.size() == 2 && good == 2, str(good) + "/" + str(fixtures.size()) + " (" + names + ")"};
  });

  // 9
  run(9, "ternary-array products order 16", 60.0, [] {
    std::size_t found = 0, eligible = 0;
    bool factors_ok = true;
    for (const auto& c : builtin_order16_catalog()) {
      if (exclusion_witness(c.group)) continue;
      ++eligible;
      PtaProductResult r = pta_product_search(c.group);
      if (!r.product) continue;
      ++found;
      for (const auto& f : r.product->factors) factors_ok = factors_ok && is_pta(mod2_element(c.group, f.x, f.y), 2);
      factors_ok = factors_ok && is_hadamard_ds(r.product->d);
    }
    return Outcome{eligible == 12 && found == 12 && factors_ok, str(found) + "/" + str(eligible) + " groups"};
  });

  // 10
  run(10, "oracle equivalence", 60.0, [] {
    std::mt19937_64 rng(20240117);
    std::size_t agree = 0, total = 0, positives = 0;
    for (const auto& c : builtin_order16_catalog()) {
      std::vector<ElementSet> cands;
      for (int t = 0; t < 500; ++t) {
        std::size_t k = (t % 3 == 0) ? 1 + rng() % 15 : (t % 3 == 1 ? 6 : 10);
        cands.push_back(oracle::random_subset(rng, 16, k));
      }
      if (auto d = find_difference_set(c.group)) {
        ElementSet s = minus_one_positions(*d);
        cands.push_back(s);
        // every translate is again a difference set
        for (Element g = 1; g < 16; ++g) {
          ElementSet t;
          for (Element x : s) t.push_back(c.group.mul(g, x));
          cands.push_back(make_set(t));
        }
      }
      for (const auto& s : cands) {
        const bool mine = is_hadamard_ds(c.group, s);
        const bool ref = oracle::is_hadamard_difference_set(c.group, s);
        agree += mine == ref;
        positives += ref;
        ++total;
      }
    }
    return Outcome{agree == total, str(agree) + "/" + str(total) + " agree, " + str(positives) + " positives"};
  });

  // 11
  run(11, "exclusion soundness", 600.0, [&]() -> Outcome {
    // every construction stage, exclusion disabled, on both catalogs
    ClassifyConfig all;
    all.stages = parse_stages("main,corollaries,pta,fixture,transfer");
    all.fixtures = fixtures;
    std::size_t flagged = 0, leaked = 0;
    auto sweep = [&](const std::vector<CatalogGroup>& cat) {
      auto recs = classify(cat, all);
      for (std::size_t i = 0; i < cat.size(); ++i) {
        if (!exclusion_witness(cat[i].group)) continue;
        ++flagged;
        if (recs[i].set || recs[i].status == RecordStatus::constructed) ++leaked;
      }
    };
    sweep(builtin_order16_catalog());
    std::size_t abelian = 0, kraemer_match = 0;
    if (have64) {
      sweep(cat64);
      for (std::size_t i = 0; i < cat64.size(); ++i) {
        const auto& r = recs64[i];
        if ((r.status == RecordStatus::excluded_turyn || r.status == RecordStatus::excluded_dillon) && r.set) ++leaked;
        if (!is_abelian(cat64[i].group)) continue;
        ++abelian;
        kraemer_match += (r.status == RecordStatus::constructed) == turyn_exponent_check(cat64[i].group);
      }
    }
    const bool ok = leaked == 0 && flagged == (have64 ? 10u : 2u) && (!have64 || (abelian == 11 && kraemer_match == 11));
    return Outcome{ok, "excluded groups given a set: " + str(leaked) + "/" + str(flagged) +
                           ", abelian order 64 matching exponent bound: " + str(kraemer_match) + "/" + str(abelian)};
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
