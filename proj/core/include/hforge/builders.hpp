#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hforge/finite_group.hpp"

namespace hforge {

FiniteGroup cyclic(std::size_t n, const std::string& generator = "x");
FiniteGroup elementary_abelian(std::size_t rank);

/// G x H, element (g, h) stored at index g + |G| * h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// <x, y : x^m = 1, y^n = x^t, y x y^-1 = x^k>, element x^i y^j at index i + m*j.
/// Requires k^n = 1 and t*k = t (mod m).
FiniteGroup metacyclic(std::size_t m, std::size_t n, long long k, long long t);

/// C_m x|_k C_n, the split case of metacyclic(); rejects k with k^n != 1 mod m.
FiniteGroup semidirect_cyclic(std::size_t m, std::size_t n, long long k);

/// N x| H where action[h] is the automorphism of N (as a permutation of
/// its element indices) induced by h. Element (n, h) at index n + |N| * h.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<Element>>& action);

// Named 2-group families; every argument is the group order.
FiniteGroup dihedral(std::size_t order);
FiniteGroup quaternion8();
FiniteGroup generalized_quaternion(std::size_t order);
FiniteGroup semidihedral(std::size_t order);
FiniteGroup modular(std::size_t order);

}  // namespace hforge
