#include "hforge/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "hforge/abelian.hpp"
#include "hforge/builders.hpp"
#include "hforge/checks.hpp"
#include "hforge/error.hpp"
#include "hforge/structure.hpp"

namespace hforge {

namespace {

// a * x for a single group element a, without a full convolution.
RingElement left_shift(Element a, const RingElement& x) {
  const FiniteGroup& g = x.group();
  RingElement out(g);
  for (Element h = 0; h < g.order(); ++h) {
    if (x[h] != 0) out.set(g.mul(a, h), x[h]);
  }
  return out;
}

std::uint32_t conjugate_character(const FiniteGroup& g, const ElemAbelianEmbedding& e, Element by,
                                  std::uint32_t u) {
  RingElement chi = character_element(e, CharacterIndex{u, e.rank()});
  RingElement conj(g);
  for (Element h = 0; h < g.order(); ++h) {
    if (chi[h] != 0) conj.set(conjugate(g, by, h), chi[h]);
  }
  auto found = find_character(e, conj);
  require(found.has_value(), Errc::not_normal, "conjugation does not preserve E");
  return found->bits;
}

void require_ds(const RingElement& d, const std::string& what) {
  DsVerdict v = verify_hadamard_ds(d);
  if (!v.valid) fail(Errc::verification, what + ": result is not a Hadamard difference set (" +
                                             std::string(to_string(v.failure)) + ")");
}

bool supported_in(const RingElement& a, const ElementSet& s) {
  for (Element h : support(a)) {
    if (!contains(s, h)) return false;
  }
  return true;
}

struct Option {
  std::size_t coset;
  const std::vector<std::uint32_t>* perm;
  Element rep;
};

// Backtracking over (u -> option) with distinct cosets and distinct images.
std::optional<std::vector<Element>> assign_reps(std::size_t n_chars, std::size_t n_cosets,
                                                const std::vector<Option>& options) {
  std::vector<int> chosen(n_chars, -1);
  std::vector<bool> coset_used(n_cosets, false), image_used(n_chars, false);
  std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
    if (depth == n_chars) return true;
    std::size_t best = n_chars, best_count = ~std::size_t{0};
    for (std::size_t u = 0; u < n_chars; ++u) {
      if (chosen[u] >= 0) continue;
      std::size_t count = 0;
      for (const auto& o : options) {
        if (!coset_used[o.coset] && !image_used[(*o.perm)[u]]) ++count;
      }
      if (count < best_count) {
        best = u;
        best_count = count;
      }
    }
    if (best_count == 0) return false;
    for (std::size_t i = 0; i < options.size(); ++i) {
      const Option& o = options[i];
      std::uint32_t img = (*o.perm)[best];
      if (coset_used[o.coset] || image_used[img]) continue;
      chosen[best] = static_cast<int>(i);
      coset_used[o.coset] = image_used[img] = true;
      if (dfs(depth + 1)) return true;
      chosen[best] = -1;
      coset_used[o.coset] = image_used[img] = false;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  std::vector<Element> reps(n_chars);
  for (std::size_t u = 0; u < n_chars; ++u) reps[u] = options[static_cast<std::size_t>(chosen[u])].rep;
  return reps;
}

}  // namespace

DriskoInstance make_drisko_instance(const FiniteGroup& g, const ElementSet& k, const ElemAbelianEmbedding& e) {
  require(e.parent == g, Errc::group_mismatch, "E must live in G");
  require(is_normal(g, k), Errc::not_normal, "K is not normal in G");
  const std::size_t r = e.rank();
  require(k.size() << r == g.order(), Errc::invalid_argument, "K must have index 2^r in G");
  for (Element x : e.elements) require(contains(k, x), Errc::invalid_argument, "E is not contained in K");
  require(is_normal(g, e.elements), Errc::not_normal, "E is not normal in G");
  DriskoInstance inst{g, k, e, coset_representatives(g, k), {}};
  for (Element rep : inst.coset_reps) {
    std::vector<std::uint32_t> perm(std::size_t{1} << r);
    for (std::uint32_t u = 0; u < perm.size(); ++u) perm[u] = conjugate_character(g, e, rep, u);
    inst.action.push_back(std::move(perm));
  }
  return inst;
}

std::vector<Element> drisko_coset_reps(const DriskoInstance& inst) {
  const std::size_t n = inst.coset_reps.size();
  std::vector<Option> options;
  for (std::size_t c = 0; c < n; ++c) options.push_back({c, &inst.action[c], inst.coset_reps[c]});
  if (auto reps = assign_reps(n, n, options)) return *reps;

  // Elements of K may act on E too; offer every distinct action in each coset.
  const FiniteGroup& g = inst.group;
  auto index = coset_index(g, inst.normal_subgroup);
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::pair<std::size_t, Element>> owners;
  std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, Element> seen;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t u = 0; u < n; ++u) perm[u] = conjugate_character(g, inst.e, x, u);
    if (seen.emplace(std::make_pair(index[x], perm), x).second) {
      perms.push_back(std::move(perm));
      owners.emplace_back(index[x], x);
    }
  }
  options.clear();
  for (std::size_t i = 0; i < perms.size(); ++i) options.push_back({owners[i].first, &perms[i], owners[i].second});
  std::stable_sort(options.begin(), options.end(), [](const Option& a, const Option& b) { return a.coset < b.coset; });
  if (auto reps = assign_reps(n, n, options)) return *reps;
  fail(Errc::internal, "no coset representatives permute the characters of E");
}

RingElement assemble_prehadamard(const FiniteGroup& g, const ElementSet& k, const ElemAbelianEmbedding& e,
                                 const std::vector<RingElement>& blocks) {
  const std::size_t n = std::size_t{1} << e.rank();
  require(blocks.size() == n, Errc::invalid_argument, "need one block per character");
  for (const auto& a : blocks) {
    require(a.group() == g, Errc::group_mismatch, "blocks must live in ZG");
    require(supported_in(a, k), Errc::invalid_argument, "blocks must be supported on K");
  }
  DriskoInstance inst = make_drisko_instance(g, k, e);
  std::vector<Element> reps = drisko_coset_reps(inst);
  RingElement d(g);
  for (std::uint32_t u = 0; u < n; ++u) {
    d += left_shift(reps[u], blocks[u] * character_element(e, CharacterIndex{u, e.rank()}));
  }
  require_ds(d, "signature assembly");
  return d;
}

RingElement assemble_prehadamard(const FiniteGroup& g, const SignatureSet& s, const GroupMap& emb) {
  require(emb.source == s.carrier && emb.target == g, Errc::group_mismatch, "embedding does not match K and G");
  require(emb.is_injective(), Errc::invalid_argument, "embedding K -> G must be injective");
  ElemAbelianEmbedding e = map_embedding(s.subgroup, emb);
  std::vector<RingElement> blocks;
  for (const auto& a : s.blocks) blocks.push_back(apply_map(a, emb));
  return assemble_prehadamard(g, emb.image(), e, blocks);
}

McFarlandResult mcfarland_construct(const FiniteGroup& j) {
  const std::size_t nj = j.order();
  require(is_power_of_two(nj) && nj >= 2, Errc::invalid_argument, "|J| must be 2^{d+1}");
  const std::size_t r = log2_exact(nj);
  FiniteGroup g = direct_product(j, elementary_abelian(r));
  std::vector<Element> basis;
  for (std::size_t i = 0; i < r; ++i) basis.push_back(static_cast<Element>(nj << i));
  ElemAbelianEmbedding e = make_elem_abelian_embedding(g, basis);
  std::vector<RingElement> blocks(std::size_t{1} << r, RingElement::one(g));
  return {g, assemble_prehadamard(g, e.elements, e, blocks)};
}

PtaProductResult pta_product_search(const FiniteGroup& g, const PtaSearchOptions& options) {
  auto d = hadamard_d(g.order());
  require(d.has_value(), Errc::invalid_argument, "|G| must be 2^{2d+2}");
  PtaSearchResult res = search_pta_factors(g, ElementSet{0}, static_cast<std::size_t>(*d) + 1, options);
  PtaProductResult out{std::nullopt, res.nodes, res.complete};
  if (res.factors) {
    RingElement prod = pta_product(g, *res.factors);
    require_ds(prod, "PTA product");
    out.product = PtaProduct{*res.factors, std::move(prod)};
  }
  return out;
}

RingElement cor_pta_ss_assemble(const FiniteGroup& g, const Subgroup& k, const SignatureSet& s) {
  require(k.inclusion.target == g, Errc::group_mismatch, "subgroup does not belong to G");
  require(k.group.order() * 2 == g.order(), Errc::invalid_argument, "K must have index 2");
  require(s.carrier == k.group && s.rank() == 1, Errc::invalid_argument, "need a rank-1 signature set on K");
  Element c = k.inclusion(s.subgroup.basis[0]);
  require(contains(center(g), c), Errc::precondition, "the involution must be central in G");
  return assemble_prehadamard(g, s, k.inclusion);
}

RingElement modified_signature_assemble(const FiniteGroup& g, const ElemAbelianEmbedding& e,
                                        const std::vector<RingElement>& blocks) {
  require(e.parent == g, Errc::group_mismatch, "E must live in G");
  const std::size_t n = std::size_t{1} << e.rank();
  require(blocks.size() == n, Errc::invalid_argument, "need one block per character");
  RingElement total(g);
  std::vector<bool> used(g.order(), false);
  for (const auto& a : blocks) {
    require(a.group() == g, Errc::group_mismatch, "blocks must live in ZG");
    require(is_ternary(a), Errc::support_failure, "blocks must have coefficients in {-1,0,1}");
    for (Element h : support(a)) {
      require(!used[h], Errc::support_failure, "block supports overlap at " + g.label(h));
      used[h] = true;
    }
    total += a;
  }
  require(is_transversal_support(total, e), Errc::support_failure, "block supports do not form a transversal of E");
  RingElement sum(g);
  RingElement d(g);
  for (std::uint32_t u = 0; u < n; ++u) {
    RingElement b = blocks[u] * character_element(e, CharacterIndex{u, e.rank()});
    sum += multiply(b, involution(blocks[u]));
    d += b;
  }
  require(is_scalar(sum, static_cast<Coeff>(g.order() >> e.rank())), Errc::verification,
          "sum of A_u chi_u A_u^(-1) is not |G|/2^r");
  require_ds(d, "modified signature assembly");
  return d;
}

FinalConditions final_conditions(const FiniteGroup& g, Element central, const RingElement& d0,
                                 const RingElement& d1) {
  require(g.element_order(central) == 2 && contains(center(g), central), Errc::precondition,
          "g must be a central involution");
  require(d0.group() == g && d1.group() == g, Errc::group_mismatch, "D0 and D1 must live in ZG");
  FinalConditions out;
  const auto side = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(g.order()))));
  if (side * side == static_cast<long long>(g.order()) && side % 2 == 0) {
    Quotient q = quotient(g, make_set({0, central}));
    out.d0_pta = is_pta(pushforward(d0, q.projection), side / 2);
  }
  RingElement one_minus = RingElement::one(g) - RingElement::basis(g, central);
  RingElement one_plus = RingElement::one(g) + RingElement::basis(g, central);
  out.d1_identity = d1 * one_minus * involution(d1) == static_cast<Coeff>(g.order() / 4) * one_minus;
  RingElement p0 = d0 * one_plus, p1 = d1 * one_minus;
  bool ok = true;
  for (Element h = 0; h < g.order() && ok; ++h) {
    bool a = p0[h] == 1 || p0[h] == -1, b = p1[h] == 1 || p1[h] == -1;
    ok = (a != b) && (a || p0[h] == 0) && (b || p1[h] == 0);
  }
  out.support_partition = ok;
  return out;
}

RingElement original_final_assemble(const FiniteGroup& g, Element central, const RingElement& d0,
                                    const RingElement& d1) {
  FinalConditions c = final_conditions(g, central, d0, d1);
  require(c.d0_pta, Errc::pta_failure, "image of D0 in G/<g> is not a PTA of modulus sqrt|G|/2");
  require(c.d1_identity, Errc::verification, "D1 (1-g) D1^(-1) != |G|/4 (1-g)");
  require(c.support_partition, Errc::support_failure, "supports of D0(1+g) and D1(1-g) do not partition G");
  RingElement d = d0 * (RingElement::one(g) + RingElement::basis(g, central)) +
                  d1 * (RingElement::one(g) - RingElement::basis(g, central));
  require_ds(d, "final assembly");
  return d;
}

RingElement dillon_product(const FiniteGroup& g, const ElementSet& h1, const ElementSet& h2, const RingElement& d1,
                           const RingElement& d2) {
  require(is_subgroup(g, h1) && is_subgroup(g, h2), Errc::not_closed, "H1 and H2 must be subgroups");
  require(h1.size() * h2.size() == g.order(), Errc::invalid_argument, "|H1||H2| must equal |G|");
  for (Element x : h1) {
    require(x == 0 || !contains(h2, x), Errc::invalid_argument, "H1 and H2 must intersect trivially");
  }
  auto check_factor = [&](const RingElement& d, const ElementSet& h, const char* name) {
    require(d.group() == g, Errc::group_mismatch, std::string(name) + " must live in ZG");
    require(is_pm1_on(d, h) && supported_in(d, h), Errc::precondition, std::string(name) + " must be +-1 on its subgroup");
    require(is_scalar(d * involution(d), static_cast<Coeff>(h.size())), Errc::precondition,
            std::string(name) + " is not a Hadamard difference set");
  };
  check_factor(d1, h1, "D1");
  check_factor(d2, h2, "D2");
  RingElement d = d1 * d2;
  require_ds(d, "product construction");
  return d;
}

Decomposition decompose(const RingElement& d, const ElementSet& k) {
  const FiniteGroup& g = d.group();
  Decomposition out{subgroup_as_group(g, k), coset_representatives(g, k), {}};
  for (Element rep : out.reps) {
    std::vector<Coeff> part(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) part[i] = d[g.mul(rep, k[i])];
    out.parts.emplace_back(out.k.group, std::move(part));
  }
  return out;
}

TransferResult transfer_search(const Decomposition& src, const FiniteGroup& gp, const Subgroup& kp,
                               const GroupMap& iso, const TransferOptions& options) {
  require(iso.source == src.k.group && iso.target == kp.group && iso.is_bijective(), Errc::invalid_argument,
          "iso must map K onto K'");
  require(kp.inclusion.target == gp, Errc::group_mismatch, "K' must be a subgroup of G'");
  require(src.k.inclusion.target.order() == gp.order(), Errc::invalid_argument, "G and G' must have equal order");
  const ElementSet kset = kp.inclusion.image();
  const std::vector<Element> reps = coset_representatives(gp, kset);
  const std::vector<std::size_t> index = coset_index(gp, kset);
  const std::size_t m = reps.size();
  require(src.parts.size() == m, Errc::invalid_argument, "decomposition does not match the index of K'");

  std::vector<RingElement> moved;
  std::vector<Coeff> aug;
  for (const auto& p : src.parts) {
    moved.push_back(apply_map(apply_map(p, iso), kp.inclusion));
    aug.push_back(p.augmentation());
  }
  std::vector<std::vector<Element>> members(m);
  for (Element x = 0; x < gp.order(); ++x) members[index[x]].push_back(x);

  std::optional<Quotient> q;
  if (is_normal(gp, kset)) q = quotient(gp, kset);

  TransferResult out;
  std::vector<std::size_t> cosets(m);
  for (std::size_t i = 0; i < m; ++i) cosets[i] = i;
  std::vector<Element> choice(m, 0);
  auto budget_left = [&] {
    if (options.node_budget != 0 && out.nodes >= options.node_budget) {
      out.complete = false;
      return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> place = [&](std::size_t u) -> bool {
    if (!budget_left()) return false;
    ++out.nodes;
    if (u == m) {
      RingElement d(gp);
      for (std::size_t v = 0; v < m; ++v) d += left_shift(choice[v], moved[v]);
      if (!is_hadamard_ds(d)) return false;
      out.d = std::move(d);
      return true;
    }
    for (Element x : members[cosets[u]]) {
      choice[u] = x;
      if (place(u + 1)) return true;
      if (!out.complete) return false;
    }
    return false;
  };

  choice[0] = 0;
  do {
    if (!budget_left()) break;
    ++out.nodes;
    if (q) {
      // the image in Z[G'/K'] only depends on the coset assignment
      RingElement img(q->group);
      for (std::size_t u = 0; u < m; ++u) img.set(q->projection(reps[cosets[u]]), aug[u]);
      if (!is_scalar(img * involution(img), static_cast<Coeff>(gp.order()))) continue;
    }
    if (place(1)) return out;
    if (!out.complete) break;
  } while (std::next_permutation(cosets.begin() + 1, cosets.end()));
  return out;
}

}  // namespace hforge
