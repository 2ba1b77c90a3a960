#pragma once

// Property checks shared by the unit suites and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <vector>

#include "hforge/characters.hpp"
#include "hforge/checks.hpp"
#include "hforge/ring.hpp"
#include "hforge/signatures.hpp"
#include "hforge/structure.hpp"
#include "oracles.hpp"

namespace props {

using namespace hforge;

// One basis per elementary abelian subgroup of rank 1..max_rank, grown by
// adjoining commuting involutions outside the current span.
inline std::vector<std::vector<Element>> elementary_abelian_bases(const FiniteGroup& g, std::size_t max_rank) {
  std::vector<Element> involutions;
  for (Element a = 1; a < g.order(); ++a) {
    if (g.mul(a, a) == 0) involutions.push_back(a);
  }
  std::vector<std::vector<Element>> out;
  std::vector<ElementSet> seen;
  std::vector<std::pair<std::vector<Element>, ElementSet>> layer{{{}, ElementSet{0}}};
  for (std::size_t rank = 1; rank <= max_rank; ++rank) {
    std::vector<std::pair<std::vector<Element>, ElementSet>> next;
    for (const auto& [basis, span] : layer) {
      for (Element a : involutions) {
        if (std::binary_search(span.begin(), span.end(), a)) continue;
        bool commutes = true;
        for (Element b : basis) commutes = commutes && g.mul(a, b) == g.mul(b, a);
        if (!commutes) continue;
        ElementSet bigger = span;
        for (Element h : span) bigger.push_back(g.mul(h, a));
        std::sort(bigger.begin(), bigger.end());
        if (std::find(seen.begin(), seen.end(), bigger) != seen.end()) continue;
        seen.push_back(bigger);
        std::vector<Element> nb = basis;
        nb.push_back(a);
        out.push_back(nb);
        next.emplace_back(std::move(nb), std::move(bigger));
      }
    }
    layer = std::move(next);
  }
  return out;
}

// Product over the nonzero coefficients only; characters live on E.
inline RingElement sparse_multiply(const RingElement& a, const RingElement& b) {
  const FiniteGroup& g = a.group();
  std::vector<Coeff> out(g.order(), 0);
  const ElementSet sb = support(b);
  for (Element x : support(a)) {
    for (Element y : sb) out[g.mul(x, y)] += a[x] * b[y];
  }
  return RingElement(g, std::move(out));
}

// chi_u chi_v^(-1) = 2^r chi_u if u = v else 0; sum_u chi_u = 2^r; aug(chi_u) = 2^r [u = 0].
inline bool orthogonality_holds(const ElemAbelianEmbedding& e) {
  const FiniteGroup& g = e.parent;
  const Coeff two_r = Coeff{1} << e.rank();
  const auto idx = all_characters(e.rank());
  std::vector<RingElement> chars, inv;
  for (const auto& u : idx) {
    chars.push_back(character_element(e, u));
    inv.push_back(involution(chars.back()));
  }
  RingElement sum = RingElement::zero(g);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (inv[i] != chars[i]) return false;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      RingElement p = sparse_multiply(chars[i], inv[j]);
      if (p != (i == j ? scalar_mul(two_r, chars[i]) : RingElement::zero(g))) return false;
    }
    if (chars[i].augmentation() != (idx[i].is_principal() ? two_r : 0)) return false;
    sum += chars[i];
  }
  return sum == RingElement::basis(g, 0, two_r);
}

// Every block verifies and B_u B_v^(-1) = |K| chi_u [u = v].
inline bool signature_set_sound(const SignatureSet& s) {
  if (s.blocks.size() != (std::size_t{1} << s.rank())) return false;
  if (first_failing_block(s)) return false;
  const auto b = signature_products(s);
  const auto chars = all_characters(s.rank());
  const Coeff k = static_cast<Coeff>(s.carrier.order());
  for (const auto& u : chars) {
    for (const auto& v : chars) {
      RingElement p = b[u.bits] * involution(b[v.bits]);
      RingElement want =
          u == v ? scalar_mul(k, character_element(s.subgroup, u)) : RingElement::zero(s.carrier);
      if (p != want) return false;
    }
  }
  return true;
}

inline bool minus_one_counts_hold(const SignatureSet& s) {
  const auto b = signature_products(s);
  for (const auto& u : all_characters(s.rank())) {
    if (!minus_one_count_check(b[u.bits], u, s.rank())) return false;
  }
  return true;
}

}  // namespace props
