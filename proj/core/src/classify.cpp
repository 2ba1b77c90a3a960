#include "hforge/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "hforge/builders.hpp"
#include "hforge/checks.hpp"
#include "hforge/error.hpp"
#include "hforge/signatures.hpp"
#include "hforge/structure.hpp"

namespace hforge {

namespace {

std::string tuple_string(const std::vector<std::size_t>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "x" : "") + std::string("C") + std::to_string(t[i]);
  return s;
}

std::string set_string(const FiniteGroup& g, const ElementSet& s, std::size_t limit = 6) {
  std::string out = "<";
  std::vector<Element> gens;
  // short description: up to `limit` labels of a generating subset
  ElementSet span{0};
  for (Element x : s) {
    if (contains(span, x)) continue;
    gens.push_back(x);
    span = subgroup_generated(g, gens);
    if (gens.size() >= limit) break;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + g.label(gens[i]);
  if (gens.empty()) return "1";
  return out + ">";
}

std::vector<Element> central_involutions(const FiniteGroup& g, const ElementSet& within) {
  std::vector<Element> out;
  ElementSet z = center(g);
  for (Element x : z) {
    if (g.element_order(x) == 2 && contains(within, x)) out.push_back(x);
  }
  return out;
}

bool has_unique_involution(const FiniteGroup& g) {
  std::size_t n = 0;
  for (Element x = 0; x < g.order(); ++x) n += g.element_order(x) == 2;
  return n == 1;
}

template <class F>
std::optional<Construction> attempt(F&& f) {
  try {
    return f();
  } catch (const Error&) {
    return std::nullopt;
  }
}

const std::vector<std::pair<Stage, std::string_view>> kStageNames{
    {Stage::exclusion, "exclusion"}, {Stage::main, "main"},       {Stage::corollaries, "corollaries"},
    {Stage::pta_product, "pta"},     {Stage::fixture, "fixture"}, {Stage::transfer, "transfer"},
};

}  // namespace

std::string_view to_string(Stage s) {
  for (const auto& [k, v] : kStageNames) {
    if (k == s) return v;
  }
  return "unknown";
}

std::vector<Stage> default_stages() {
  return {Stage::exclusion, Stage::main, Stage::corollaries, Stage::pta_product, Stage::fixture};
}

std::vector<Stage> parse_stages(const std::string& text) {
  std::vector<Stage> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::optional<Stage> found;
    for (const auto& [k, v] : kStageNames) {
      if (item == v || item == std::to_string(static_cast<int>(k))) found = k;
    }
    if (item == "cor") found = Stage::corollaries;
    if (!found) fail(Errc::parse, "unknown stage '" + item + "'");
    if (std::find(out.begin(), out.end(), *found) == out.end()) out.push_back(*found);
  }
  if (out.empty()) fail(Errc::parse, "empty stage list");
  std::sort(out.begin(), out.end());
  return out;
}

std::string config_hash(const ClassifyConfig& c, std::size_t order) {
  std::ostringstream s;
  s << "hforge-classify-v1;order=" << order << ";stages=";
  for (Stage st : c.stages) s << static_cast<int>(st) << ',';
  s << ";pta=" << c.pta.node_budget << ',' << c.pta.conjugacy_reduction;
  s << ";transfer=" << c.transfer.node_budget << ',' << c.transfer_attempts << ";fixtures=";
  for (const auto& f : c.fixtures) s << f.name << '@' << f.group_expr << ',';
  return fnv1a_hex(s.str());
}

std::optional<Construction> construct_main(const FiniteGroup& g) {
  auto d = hadamard_d(g.order());
  if (!d || *d < 1) return std::nullopt;
  auto tuples = valid_abelian_tuples(*d);
  // the elementary abelian tuple (plain Drisko) first, then longer tuples
  std::stable_sort(tuples.begin(), tuples.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (const auto& t : tuples) {
    auto k = find_normal_abelian_subgroup(g, t);
    if (!k) continue;
    auto res = attempt([&]() -> std::optional<Construction> {
      SignatureSet s = abelian_signature_set(*d, t);
      GroupMap emb{s.carrier, g, k->embedding.images};
      check_homomorphism(emb);
      bool elementary = std::all_of(t.begin(), t.end(), [](std::size_t o) { return o == 2; });
      return Construction{elementary ? Method::trivial_drisko : Method::main_theorem, assemble_prehadamard(g, s, emb),
                          "K=" + tuple_string(t) + " " + set_string(g, k->elements)};
    });
    if (res) return res;
  }
  return std::nullopt;
}

std::optional<RingElement> find_difference_set(const FiniteGroup& g) {
  if (auto c = construct_main(g)) return c->d;
  if (auto c = construct_pta_product(g)) return c->d;
  if (auto c = construct_hds_c2(g)) return c->d;
  if (auto c = construct_pta_sig(g)) return c->d;
  if (auto c = construct_quaternion(g)) return c->d;
  if (auto c = construct_sig_product(g)) return c->d;
  return std::nullopt;
}

std::optional<Construction> construct_hds_c2(const FiniteGroup& g) {
  auto d = hadamard_d(g.order());
  if (!d || *d < 1) return std::nullopt;
  for (const ElementSet& k : index_two_subgroups(g)) {
    Subgroup sub = subgroup_as_group(g, k);
    for (Element t : central_involutions(g, k)) {
      Element tl = static_cast<Element>(std::lower_bound(k.begin(), k.end(), t) - k.begin());
      for (const ElementSet& hl : index_two_subgroups(sub.group)) {
        if (contains(hl, tl)) continue;
        Subgroup hs = subgroup_as_group(sub.group, hl);
        if (exclusion_witness(hs.group)) continue;
        auto hd = find_difference_set(hs.group);
        if (!hd) continue;
        auto res = attempt([&]() -> std::optional<Construction> {
          SignatureSet s = hds_times_c2_signature_set(hs.group, *hd);
          const std::size_t nh = hs.group.order();
          std::vector<Element> img(s.carrier.order());
          for (Element a = 0; a < img.size(); ++a) {
            Element h = k[hl[a % nh]];
            img[a] = a / nh ? g.mul(h, t) : h;
          }
          GroupMap emb{s.carrier, g, std::move(img)};
          check_homomorphism(emb);
          return Construction{Method::hds_c2, assemble_prehadamard(g, s, emb),
                              "K=H x <" + g.label(t) + ">, H=" + set_string(g, make_set(emb.images))};
        });
        if (res) return res;
      }
    }
  }
  return std::nullopt;
}

std::optional<Construction> construct_pta_sig(const FiniteGroup& g, const PtaSearchOptions& opts) {
  auto d = hadamard_d(g.order());
  if (!d || *d < 1) return std::nullopt;
  for (const ElementSet& k : index_two_subgroups(g)) {
    Subgroup sub = subgroup_as_group(g, k);
    for (Element c : central_involutions(g, k)) {
      Element cl = static_cast<Element>(std::lower_bound(k.begin(), k.end(), c) - k.begin());
      auto res = attempt([&]() -> std::optional<Construction> {
        auto s = pta_search_for_signature(sub.group, cl, opts);
        if (!s) return std::nullopt;
        return Construction{Method::pta_sig, cor_pta_ss_assemble(g, sub, *s),
                            "K=" + set_string(g, k) + ", g=" + g.label(c)};
      });
      if (res) return res;
    }
  }
  return std::nullopt;
}

std::optional<Construction> construct_quaternion(const FiniteGroup& g) {
  if (g.order() != 16) return std::nullopt;
  SignatureSet s = quaternion_signature_set();
  for (const ElementSet& k : index_two_subgroups(g)) {
    Subgroup sub = subgroup_as_group(g, k);
    if (is_abelian(sub.group) || !has_unique_involution(sub.group)) continue;
    auto iso = find_isomorphism_by_generators(s.carrier, sub.group);
    if (!iso) continue;
    auto res = attempt([&]() -> std::optional<Construction> {
      return Construction{Method::quaternion, assemble_prehadamard(g, s, compose(sub.inclusion, *iso)),
                          "K=Q8 " + set_string(g, k)};
    });
    if (res) return res;
  }
  return std::nullopt;
}

std::optional<Construction> construct_sig_product(const FiniteGroup& g) {
  if (g.order() != 64) return std::nullopt;
  SignatureSet s = signature_product(quaternion_signature_set(), trivial_signature_set(1));
  std::vector<ElementSet> seen;
  for (const ElementSet& m : index_two_subgroups(g)) {
    Subgroup ms = subgroup_as_group(g, m);
    for (const ElementSet& ll : index_two_subgroups(ms.group)) {
      ElementSet l;
      for (Element x : ll) l.push_back(m[x]);
      l = make_set(std::move(l));
      if (std::find(seen.begin(), seen.end(), l) != seen.end()) continue;
      seen.push_back(l);
      if (!is_normal(g, l)) continue;
      Subgroup ls = subgroup_as_group(g, l);
      if (is_abelian(ls.group) || center(ls.group).size() != 4) continue;
      // E = Z(K) is characteristic in K, hence normal in G
      auto iso = find_isomorphism_by_generators(s.carrier, ls.group);
      if (!iso) continue;
      auto res = attempt([&]() -> std::optional<Construction> {
        return Construction{Method::sig_product, assemble_prehadamard(g, s, compose(ls.inclusion, *iso)),
                            "K=Q8xC2 " + set_string(g, l)};
      });
      if (res) return res;
    }
  }
  return std::nullopt;
}

std::optional<Construction> construct_pta_product(const FiniteGroup& g, const PtaSearchOptions& opts) {
  if (!hadamard_d(g.order())) return std::nullopt;
  return attempt([&]() -> std::optional<Construction> {
    auto r = pta_product_search(g, opts);
    if (!r.product) return std::nullopt;
    std::string detail;
    for (const auto& f : r.product->factors) {
      detail += (detail.empty() ? "" : " ") + std::string("(") + g.label(f.x) + "," + g.label(f.y) + ")";
    }
    return Construction{Method::pta_product, r.product->d, detail};
  });
}

std::optional<Construction> construct_fixture(const FiniteGroup& g, const std::vector<FinalFixture>& fixtures) {
  for (const auto& f : fixtures) {
    if (f.group.order() != g.order()) continue;
    auto iso = find_isomorphism_by_generators(f.group, g);
    if (!iso) continue;
    auto res = attempt([&]() -> std::optional<Construction> {
      RingElement d = apply_map(fixture_difference_set(f), *iso);
      if (!is_hadamard_ds(d)) return std::nullopt;
      return Construction{Method::fixture, std::move(d), f.name};
    });
    if (res) return res;
  }
  return std::nullopt;
}

namespace {

ConstructionRecord constructed(const CatalogGroup& c, Stage stage, const Construction& k) {
  ConstructionRecord r;
  r.group_id = c.id;
  r.order = c.group.order();
  DsVerdict v = verify_hadamard_ds(k.d);
  require(v.valid, Errc::internal, c.id + ": construction failed re-verification");
  r.status = RecordStatus::constructed;
  r.method = k.method;
  r.stage = static_cast<int>(stage);
  r.set = minus_one_positions(k.d);
  r.params = v.params;
  r.verified = true;
  r.detail = k.detail;
  r.checksum = record_checksum(r);
  return r;
}

bool enabled(const ClassifyConfig& c, Stage s) {
  return std::find(c.stages.begin(), c.stages.end(), s) != c.stages.end();
}

std::optional<RingElement> transfer_into(const FiniteGroup& target, const FiniteGroup& source,
                                         const RingElement& d, const ClassifyConfig& config, std::string& detail) {
  std::uint64_t attempts = 0;
  auto target_ks = index_two_subgroups(target);
  std::vector<Subgroup> target_subs;
  for (const auto& k : target_ks) target_subs.push_back(subgroup_as_group(target, k));
  for (const ElementSet& k : index_two_subgroups(source)) {
    Decomposition dec = decompose(d, k);
    auto fp = structure_fingerprint(dec.k.group);
    for (std::size_t i = 0; i < target_subs.size(); ++i) {
      if (attempts++ >= config.transfer_attempts) return std::nullopt;
      if (structure_fingerprint(target_subs[i].group) != fp) continue;
      auto iso = find_isomorphism_by_generators(dec.k.group, target_subs[i].group);
      if (!iso) continue;
      TransferResult tr = transfer_search(dec, target, target_subs[i], *iso, config.transfer);
      if (tr.d) {
        detail = "K'=" + set_string(target, target_ks[i]);
        return tr.d;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ConstructionRecord classify_group(const CatalogGroup& c, const ClassifyConfig& config) {
  const FiniteGroup& g = c.group;
  require(hadamard_d(g.order()).has_value(), Errc::invalid_argument,
          c.id + ": order " + std::to_string(g.order()) + " is not 2^{2d+2}");
  ConstructionRecord r;
  r.group_id = c.id;
  r.order = g.order();

  if (enabled(config, Stage::exclusion)) {
    if (auto w = exclusion_witness(g)) {
      r.status = w->kind == ExclusionKind::turyn ? RecordStatus::excluded_turyn : RecordStatus::excluded_dillon;
      r.stage = static_cast<int>(Stage::exclusion);
      r.detail = "K=" + set_string(g, w->kernel) + " |K|=" + std::to_string(w->kernel.size());
      r.checksum = record_checksum(r);
      return r;
    }
  }
  if (enabled(config, Stage::main)) {
    if (auto k = construct_main(g)) return constructed(c, Stage::main, *k);
  }
  if (enabled(config, Stage::corollaries)) {
    if (auto k = construct_quaternion(g)) return constructed(c, Stage::corollaries, *k);
    if (auto k = construct_sig_product(g)) return constructed(c, Stage::corollaries, *k);
    if (auto k = construct_hds_c2(g)) return constructed(c, Stage::corollaries, *k);
    if (auto k = construct_pta_sig(g, config.pta)) return constructed(c, Stage::corollaries, *k);
  }
  if (enabled(config, Stage::pta_product)) {
    if (auto k = construct_pta_product(g, config.pta)) return constructed(c, Stage::pta_product, *k);
  }
  if (enabled(config, Stage::fixture)) {
    if (auto k = construct_fixture(g, config.fixtures)) return constructed(c, Stage::fixture, *k);
  }
  r.status = RecordStatus::unresolved;
  r.checksum = record_checksum(r);
  return r;
}

std::size_t effective_jobs(std::size_t requested) {
  if (const char* env = std::getenv("HFORGE_JOBS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) requested = v;
  }
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

std::vector<ConstructionRecord> classify(const std::vector<CatalogGroup>& groups, const ClassifyConfig& config) {
  for (const auto& c : groups) {
    require(hadamard_d(c.group.order()).has_value(), Errc::invalid_argument,
            c.id + ": order " + std::to_string(c.group.order()) + " is not 2^{2d+2}");
  }
  std::vector<ConstructionRecord> out(groups.size());
  const std::size_t jobs = std::min(effective_jobs(config.jobs), std::max<std::size_t>(groups.size(), 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (!failed) {
      std::size_t i = next++;
      if (i >= groups.size()) return;
      try {
        out[i] = classify_group(groups[i], config);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  if (enabled(config, Stage::transfer)) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].status != RecordStatus::unresolved) continue;
      for (std::size_t j = 0; j < out.size(); ++j) {
        if (out[j].status != RecordStatus::constructed || out[j].method == Method::transfer) continue;
        if (groups[j].group.order() != groups[i].group.order()) continue;
        RingElement src = RingElement::from_subset(groups[j].group, *out[j].set);
        std::string detail;
        auto d = transfer_into(groups[i].group, groups[j].group, src, config, detail);
        if (d) {
          out[i] = constructed(groups[i], Stage::transfer, Construction{Method::transfer, *d, "from " + groups[j].id + " " + detail});
          break;
        }
      }
    }
  }
  return out;
}

StageCounts count_stages(const std::vector<ConstructionRecord>& records) {
  StageCounts c;
  for (const auto& r : records) {
    ++c.total;
    switch (r.status) {
      case RecordStatus::excluded_turyn:
      case RecordStatus::excluded_dillon: ++c.excluded; break;
      case RecordStatus::constructed: ++c.constructed; break;
      case RecordStatus::unresolved: ++c.unresolved; break;
    }
    if (r.stage >= 0 && r.stage < 7) ++c.by_stage[r.stage];
  }
  return c;
}

}  // namespace hforge
