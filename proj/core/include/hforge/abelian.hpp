#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hforge/finite_group.hpp"

namespace hforge {

/// Exponent tuple (e_1, ..., e_r) with 0 <= e_i < orders[i].
using Exponents = std::vector<long long>;

/// An abelian group C_{o_1} x ... x C_{o_r} on named cyclic generators.
///
/// Orders are kept in the caller's generator order; the signature recursion
/// relies on generator positions staying put while individual orders change.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<std::size_t> orders);

  const std::vector<std::size_t>& orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::size_t order() const noexcept { return order_; }

  /// Mixed-radix index with the first coordinate varying fastest; matches the
  /// element numbering of abelian_group().
  Element index(const Exponents& e) const;
  Exponents exponents(Element index) const;
  Exponents reduce(Exponents e) const;

  /// True when every order is a power of two and the list is non-increasing.
  bool is_canonical_2group() const;

  bool operator==(const AbelianGroup& other) const = default;

 private:
  std::vector<std::size_t> orders_;
  std::size_t order_ = 1;
};

/// Default generator names: x, y, z for rank <= 3, otherwise x1, x2, ...
std::vector<std::string> generator_names(std::size_t rank);

/// Cayley table of the group, labels written as words in the generator names.
FiniteGroup abelian_group(const AbelianGroup& group);

bool is_power_of_two(std::size_t n);
int log2_exact(std::size_t n);

}  // namespace hforge
