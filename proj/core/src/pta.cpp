#include "hforge/pta.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "hforge/checks.hpp"
#include "hforge/error.hpp"
#include "hforge/structure.hpp"

namespace hforge {

TernaryArray make_ternary_array(RingElement t, long long m) {
  require(is_pta(t, m), Errc::pta_failure, "element is not a perfect ternary array of modulus " + std::to_string(m));
  return TernaryArray{std::move(t), m};
}

RingElement mod2_element(const FiniteGroup& g, Element x, Element y) {
  RingElement t = RingElement::one(g);
  Element xy = g.mul(x, y);
  for (Element e : {x, y, xy}) t.set(e, t[e] - 1);
  return t;
}

std::vector<Mod2Candidate> mod2_pta_candidates(const FiniteGroup& g) {
  std::vector<Mod2Candidate> out;
  std::set<ElementSet> seen;
  const std::size_t n = g.order();
  for (Element x = 1; x < n; ++x) {
    const Element x2 = g.mul(x, x);
    const Element xinv = g.inv(x);
    for (Element y = 1; y < n; ++y) {
      if (y == x) continue;
      bool involution_type = g.element_order(y) == 2 && g.mul(x, y) == g.mul(y, x);
      bool quaternion_type = g.element_order(x) == 4 && g.mul(y, y) == x2 && conjugate(g, y, x) == xinv;
      if (!involution_type && !quaternion_type) continue;
      ElementSet s = make_set({0, x, y, g.mul(x, y)});
      if (s.size() != 4 || !seen.insert(s).second) continue;
      if (!is_pta(mod2_element(g, x, y), 2)) continue;
      out.push_back({x, y, std::move(s)});
    }
  }
  return out;
}

namespace {

struct PtaDfs {
  const FiniteGroup& g;
  const std::vector<Mod2Candidate>& cands;
  std::vector<std::size_t> level_one;  // admissible first-level candidate indices
  std::size_t count;
  PtaSearchOptions opts;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  std::vector<std::size_t> chosen;
  // quotients s' s^-1 for each candidate, s != s'
  std::vector<std::array<Element, 12>> quotients;

  void prepare() {
    quotients.resize(cands.size());
    for (std::size_t c = 0; c < cands.size(); ++c) {
      std::size_t k = 0;
      for (Element s : cands[c].support) {
        for (Element t : cands[c].support) {
          if (s != t) quotients[c][k++] = g.mul(t, g.inv(s));
        }
      }
    }
  }

  bool dfs(const ElementSet& p) {
    if (chosen.size() == count) return p.size() == g.order();
    std::vector<char> delta(g.order(), 0);
    for (Element a : p) {
      Element ainv = g.inv(a);
      for (Element b : p) delta[g.mul(ainv, b)] = 1;
    }
    auto try_candidate = [&](std::size_t c) {
      for (Element q : quotients[c]) {
        if (delta[q]) return false;
      }
      if (opts.node_budget != 0 && nodes >= opts.node_budget) {
        out_of_budget = true;
        return false;
      }
      ++nodes;
      std::vector<Element> next;
      next.reserve(p.size() * 4);
      for (Element a : p) {
        for (Element s : cands[c].support) next.push_back(g.mul(a, s));
      }
      chosen.push_back(c);
      if (dfs(make_set(std::move(next)))) return true;
      chosen.pop_back();
      return false;
    };
    if (chosen.empty()) {
      for (std::size_t c : level_one) {
        if (try_candidate(c)) return true;
        if (out_of_budget) return false;
      }
    } else {
      for (std::size_t c = 0; c < cands.size(); ++c) {
        if (try_candidate(c)) return true;
        if (out_of_budget) return false;
      }
    }
    return false;
  }
};

}  // namespace

PtaSearchResult search_pta_factors(const FiniteGroup& g, const ElementSet& start, std::size_t count,
                                   const PtaSearchOptions& options) {
  require(!start.empty() && start.front() == 0, Errc::invalid_argument, "start set must contain the identity");
  std::size_t expected = start.size();
  for (std::size_t i = 0; i < count; ++i) expected *= 4;
  require(expected == g.order(), Errc::invalid_argument, "|start| * 4^count must equal the group order");
  const auto cands = mod2_pta_candidates(g);
  PtaDfs search{g, cands, {}, count, options, 0, false, {}, {}};
  search.prepare();
  // conjugating a solution by any h keeps a central start set and the full
  // product fixed, so level one only needs the least support in each orbit
  for (std::size_t c = 0; c < cands.size(); ++c) {
    bool minimal = true;
    if (options.conjugacy_reduction) {
      for (Element h = 1; h < g.order() && minimal; ++h) {
        std::vector<Element> conj;
        for (Element s : cands[c].support) conj.push_back(conjugate(g, h, s));
        if (make_set(std::move(conj)) < cands[c].support) minimal = false;
      }
    }
    if (minimal) search.level_one.push_back(c);
  }
  PtaSearchResult result;
  if (search.dfs(start)) {
    std::vector<Mod2Candidate> f;
    for (std::size_t c : search.chosen) f.push_back(cands[c]);
    result.factors = std::move(f);
  }
  result.nodes = search.nodes;
  result.complete = !search.out_of_budget;
  return result;
}

RingElement pta_product(const FiniteGroup& g, const std::vector<Mod2Candidate>& factors) {
  RingElement t = RingElement::one(g);
  for (const auto& f : factors) t = multiply(t, mod2_element(g, f.x, f.y));
  return t;
}

}  // namespace hforge
