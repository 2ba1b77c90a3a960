#include "hforge/structure.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hforge/abelian.hpp"
#include "hforge/error.hpp"

namespace hforge {

namespace {

void require_subgroup(const FiniteGroup& g, const ElementSet& s) {
  require(is_subgroup(g, s), Errc::not_closed, "element set is not a subgroup");
}

// Closure of `seed` under multiplication; nullopt as soon as it exceeds `limit`.
std::optional<ElementSet> bounded_closure(const FiniteGroup& g, const std::vector<Element>& seed, std::size_t limit) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  std::vector<Element> gens;
  for (Element x : seed) {
    if (x != 0) gens.push_back(x);
  }
  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element h : frontier) {
      for (Element x : gens) {
        Element p = g.mul(h, x);
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
          next.push_back(p);
          if (members.size() > limit) return std::nullopt;
        }
      }
    }
    frontier = std::move(next);
  }
  return make_set(std::move(members));
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

std::size_t element_order(const FiniteGroup& g, Element x) { return g.element_order(x); }

std::size_t exponent(const FiniteGroup& g) {
  std::size_t e = 1;
  for (Element x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

Element conjugate(const FiniteGroup& g, Element by, Element h) { return g.mul(g.mul(by, h), g.inv(by)); }

ElementSet whole_group(const FiniteGroup& g) {
  ElementSet all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return all;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet z;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (const auto& gen : g.generators()) {
      if (g.mul(x, gen.element) != g.mul(gen.element, x)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(x);
  }
  return z;
}

ElementSet subgroup_generated(const FiniteGroup& g, const std::vector<Element>& gens) {
  for (Element x : gens) require(x < g.order(), Errc::invalid_argument, "generator index out of range");
  return *bounded_closure(g, gens, g.order());
}

std::vector<ElementSet> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<ElementSet> classes;
  for (Element x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < g.order(); ++h) cls.push_back(conjugate(g, h, x));
    ElementSet s = make_set(std::move(cls));
    for (Element y : s) done[y] = 1;
    classes.push_back(std::move(s));
  }
  return classes;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.empty() || s.front() != 0) return false;
  std::vector<char> in(g.order(), 0);
  for (Element x : s) {
    if (x >= g.order()) return false;
    in[x] = 1;
  }
  for (Element a : s) {
    for (Element b : s) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const ElementSet& s) {
  require_subgroup(g, s);
  std::vector<char> in(g.order(), 0);
  for (Element x : s) in[x] = 1;
  for (const auto& gen : g.generators()) {
    for (Element x : s) {
      if (!in[conjugate(g, gen.element, x)]) return false;
    }
  }
  return true;
}

bool is_abelian(const FiniteGroup& g, const ElementSet& s) {
  require_subgroup(g, s);
  for (Element a : s) {
    for (Element b : s) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

bool is_cyclic(const FiniteGroup& g, const ElementSet& s) {
  require_subgroup(g, s);
  return std::any_of(s.begin(), s.end(), [&](Element x) { return g.element_order(x) == s.size(); });
}

bool is_dihedral(const FiniteGroup& g, const ElementSet& s) {
  require_subgroup(g, s);
  if (s.size() < 4 || s.size() % 2 != 0) return false;
  const std::size_t m = s.size() / 2;
  for (Element c : s) {
    if (g.element_order(c) != m) continue;
    ElementSet rot = subgroup_generated(g, {c});
    Element cinv = g.inv(c);
    for (Element t : s) {
      if (contains(rot, t) || g.element_order(t) != 2) continue;
      if (conjugate(g, t, c) == cinv) return true;
    }
  }
  return false;
}

bool is_elementary_abelian(const FiniteGroup& g, const ElementSet& s, std::size_t rank) {
  require_subgroup(g, s);
  if (s.size() != (std::size_t{1} << rank)) return false;
  return std::all_of(s.begin(), s.end(), [&](Element x) { return g.element_order(x) <= 2; });
}

bool is_abelian(const FiniteGroup& g) { return is_abelian(g, whole_group(g)); }
bool is_cyclic(const FiniteGroup& g) { return is_cyclic(g, whole_group(g)); }
bool is_dihedral(const FiniteGroup& g) { return is_dihedral(g, whole_group(g)); }

std::vector<std::size_t> abelian_invariants(const FiniteGroup& g, const ElementSet& s) {
  require(is_abelian(g, s), Errc::not_abelian, "abelian_invariants needs an abelian subgroup");
  std::vector<std::size_t> factors;
  for (std::size_t p : prime_factors(s.size())) {
    // c[k] = #{x : x^(p^k) = 1}; log_p(c[k]/c[k-1]) counts factors of exponent >= k
    std::vector<std::size_t> at_least;
    std::size_t prev = 1;
    std::size_t pk = 1;
    while (true) {
      pk *= p;
      std::size_t c = std::count_if(s.begin(), s.end(), [&](Element x) { return pk % g.element_order(x) == 0; });
      if (c == prev) break;
      std::size_t ratio = c / prev;
      std::size_t count = 0;
      while (ratio > 1) {
        ratio /= p;
        ++count;
      }
      at_least.push_back(count);
      prev = c;
    }
    // primary exponents, largest first
    std::vector<std::size_t> primary;
    for (std::size_t k = at_least.size(); k >= 1; --k) {
      std::size_t exactly = at_least[k - 1] - (k < at_least.size() ? at_least[k] : 0);
      std::size_t pe = 1;
      for (std::size_t i = 0; i < k; ++i) pe *= p;
      for (std::size_t i = 0; i < exactly; ++i) primary.push_back(pe);
    }
    if (factors.size() < primary.size()) factors.resize(primary.size(), 1);
    for (std::size_t i = 0; i < primary.size(); ++i) factors[i] *= primary[i];
  }
  return factors;
}

std::vector<std::size_t> abelian_invariants(const FiniteGroup& g) { return abelian_invariants(g, whole_group(g)); }

std::vector<std::size_t> coset_index(const FiniteGroup& g, const ElementSet& s) {
  require_subgroup(g, s);
  constexpr std::size_t unset = ~std::size_t{0};
  std::vector<std::size_t> idx(g.order(), unset);
  std::size_t next = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (idx[x] != unset) continue;
    for (Element h : s) idx[g.mul(x, h)] = next;
    ++next;
  }
  return idx;
}

std::vector<Element> coset_representatives(const FiniteGroup& g, const ElementSet& s) {
  auto idx = coset_index(g, s);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (idx[x] == reps.size()) reps.push_back(x);
  }
  return reps;
}

Quotient quotient(const FiniteGroup& g, const ElementSet& n) {
  require(is_normal(g, n), Errc::not_normal, "quotient needs a normal subgroup");
  auto idx = coset_index(g, n);
  auto reps = coset_representatives(g, n);
  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = static_cast<Element>(idx[g.mul(reps[i], reps[j])]);
  }
  std::vector<std::string> labels;
  for (Element r : reps) labels.push_back(g.label(r));
  std::vector<NamedGenerator> gens;
  for (const auto& gen : g.generators()) {
    Element img = static_cast<Element>(idx[gen.element]);
    if (img != 0) gens.push_back({gen.name, img});
  }
  FiniteGroup qg(q, std::move(table), std::move(labels), std::move(gens));
  std::vector<Element> proj(g.order());
  for (Element x = 0; x < g.order(); ++x) proj[x] = static_cast<Element>(idx[x]);
  return Quotient{qg, GroupMap{g, qg, std::move(proj)}};
}

ElementSet square_subgroup(const FiniteGroup& g) {
  std::vector<Element> squares;
  for (Element x = 0; x < g.order(); ++x) squares.push_back(g.mul(x, x));
  return subgroup_generated(g, make_set(std::move(squares)));
}

std::vector<ElementSet> index_two_subgroups(const FiniteGroup& g) {
  require(is_power_of_two(g.order()), Errc::invalid_argument, "index_two_subgroups expects a 2-group");
  if (g.order() == 1) return {};
  // G/Phi is elementary abelian; index-2 subgroups are kernels of its functionals
  Quotient q = quotient(g, square_subgroup(g));
  const FiniteGroup& f = q.group;
  std::vector<std::uint32_t> coord(f.order(), ~std::uint32_t{0});
  coord[0] = 0;
  std::size_t rank = 0;
  for (Element x = 1; x < f.order(); ++x) {
    if (coord[x] != ~std::uint32_t{0}) continue;
    const std::uint32_t bit = std::uint32_t{1} << rank++;
    for (Element y = 0; y < f.order(); ++y) {
      if (coord[y] != ~std::uint32_t{0} && (coord[y] & bit) == 0) coord[f.mul(y, x)] = coord[y] | bit;
    }
  }
  std::vector<ElementSet> out;
  for (std::uint32_t func = 1; func < (std::uint32_t{1} << rank); ++func) {
    ElementSet k;
    for (Element x = 0; x < g.order(); ++x) {
      if (std::popcount(coord[q.projection(x)] & func) % 2 == 0) k.push_back(x);
    }
    out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> find_normal_subgroups_up_to(const FiniteGroup& g, std::size_t max_order) {
  require(max_order <= 8, Errc::invalid_argument, "normal subgroup enumeration is limited to order <= 8");
  std::vector<ElementSet> found;
  if (max_order < 1) return found;
  std::vector<ElementSet> classes;
  for (auto& c : conjugacy_classes(g)) {
    if (c.front() == 0) continue;
    if (c.size() < max_order && g.element_order(c.front()) <= max_order) classes.push_back(std::move(c));
  }
  std::set<ElementSet> seen;
  found.push_back({0});
  seen.insert({0});
  for (std::size_t i = 0; i < found.size(); ++i) {
    const ElementSet base = found[i];
    for (const auto& c : classes) {
      if (contains(base, c.front())) continue;
      if (base.size() + c.size() > max_order) continue;
      std::vector<Element> seed = base;
      seed.insert(seed.end(), c.begin(), c.end());
      auto m = bounded_closure(g, seed, max_order);
      if (m && seen.insert(*m).second) found.push_back(std::move(*m));
    }
  }
  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return found;
}

std::optional<NormalAbelianSubgroup> find_normal_abelian_subgroup(const FiniteGroup& g,
                                                                  const std::vector<std::size_t>& invariants) {
  std::size_t target = 1;
  for (std::size_t o : invariants) target *= o;
  require(target >= 1 && g.order() % target == 0, Errc::invalid_argument,
          "invariant product must divide the group order");
  const std::size_t r = invariants.size();
  std::vector<std::set<ElementSet>> visited(r + 1);
  std::vector<Element> basis;
  std::optional<NormalAbelianSubgroup> result;

  std::function<void(const ElementSet&)> dfs = [&](const ElementSet& partial) {
    if (result) return;
    const std::size_t i = basis.size();
    if (i == r) {
      if (abelian_invariants(g, partial) != invariants || !is_normal(g, partial)) return;
      auto emb = extend_generator_images(abelian_group(AbelianGroup(invariants)), g, basis);
      if (emb && emb->is_injective()) result = NormalAbelianSubgroup{partial, std::move(*emb)};
      return;
    }
    for (Element x = 1; x < g.order() && !result; ++x) {
      if (g.element_order(x) != invariants[i]) continue;
      bool commutes = std::all_of(basis.begin(), basis.end(), [&](Element b) { return g.mul(x, b) == g.mul(b, x); });
      if (!commutes) continue;
      std::vector<Element> seed = basis;
      seed.push_back(x);
      auto next = bounded_closure(g, seed, partial.size() * invariants[i]);
      if (!next || next->size() != partial.size() * invariants[i]) continue;
      if (!visited[i + 1].insert(*next).second) continue;
      basis.push_back(x);
      dfs(*next);
      basis.pop_back();
    }
  };
  if (r == 0) return NormalAbelianSubgroup{{0}, extend_generator_images(abelian_group(AbelianGroup({})), g, {}).value()};
  dfs({0});
  return result;
}

std::vector<std::size_t> structure_fingerprint(const FiniteGroup& g) {
  const auto all = whole_group(g);
  std::vector<std::size_t> fp{g.order(), is_abelian(g) ? 1u : 0u, center(g).size()};
  std::set<Element> squares;
  for (Element x : all) squares.insert(g.mul(x, x));
  fp.push_back(squares.size());
  std::vector<Element> commutators;
  for (Element a : all) {
    for (Element b : all) commutators.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  }
  fp.push_back(subgroup_generated(g, make_set(std::move(commutators))).size());
  std::map<std::size_t, std::size_t> order_counts;
  for (Element x : all) ++order_counts[g.element_order(x)];
  for (auto [ord, cnt] : order_counts) {
    fp.push_back(ord);
    fp.push_back(cnt);
  }
  return fp;
}

}  // namespace hforge
