#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hforge/finite_group.hpp"
#include "hforge/ring.hpp"

namespace hforge {

/// T with coefficients in {-1,0,1} and T T^(-1) = modulus^2.
struct TernaryArray {
  RingElement element;
  long long modulus = 0;
};

/// Throws Error(pta_failure) when `t` is not a perfect ternary array of modulus m.
TernaryArray make_ternary_array(RingElement t, long long m);

/// T = 1 - x - y - xy, one of the two shapes of modulus-2 arrays.
struct Mod2Candidate {
  Element x = 0;
  Element y = 0;
  ElementSet support;  // {1, x, y, xy}
};

RingElement mod2_element(const FiniteGroup& g, Element x, Element y);

/// Every modulus-2 array of the form 1-x-y-xy in g: y an involution
/// commuting with x != 1, or x of order 4 with y^2 = x^2 and y x y^-1 = x^-1.
/// Scanned by increasing (x, y), one entry per support, each re-verified.
std::vector<Mod2Candidate> mod2_pta_candidates(const FiniteGroup& g);

struct PtaSearchOptions {
  std::uint64_t node_budget = 0;  // 0 = unlimited
  bool conjugacy_reduction = true;
};

struct PtaSearchResult {
  std::optional<std::vector<Mod2Candidate>> factors;
  std::uint64_t nodes = 0;
  bool complete = true;  // false when the budget stopped the search
};

/// Depth-first search for `count` candidates with start * S_1 * ... * S_count
/// hitting every element of g exactly once. `start` must be a central subset
/// containing the identity ({1} or {1, g}).
PtaSearchResult search_pta_factors(const FiniteGroup& g, const ElementSet& start, std::size_t count,
                                   const PtaSearchOptions& options = {});

/// T_1 T_2 ... T_k for the chosen factors.
RingElement pta_product(const FiniteGroup& g, const std::vector<Mod2Candidate>& factors);

}  // namespace hforge
