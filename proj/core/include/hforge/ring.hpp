#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hforge/finite_group.hpp"
#include "hforge/group_map.hpp"

namespace hforge {

using Coeff = std::int64_t;

/// An element of the integer group ring ZG, stored densely as one
/// coefficient per group element. Arithmetic is overflow-checked and throws
/// Error(overflow) instead of wrapping.
class RingElement {
 public:
  explicit RingElement(FiniteGroup group);
  RingElement(FiniteGroup group, std::vector<Coeff> coeffs);

  static RingElement zero(const FiniteGroup& g) { return RingElement(g); }
  static RingElement one(const FiniteGroup& g) { return basis(g, 0); }
  static RingElement basis(const FiniteGroup& g, Element e, Coeff c = 1);
  /// Sum of the listed elements, each with coefficient 1.
  static RingElement sum_of(const FiniteGroup& g, const ElementSet& s);
  /// The +-1 form of a subset: -1 on the subset, +1 elsewhere.
  static RingElement from_subset(const FiniteGroup& g, const ElementSet& s);

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  Coeff operator[](Element g) const { return coeffs_[g]; }
  void set(Element g, Coeff c) { coeffs_[g] = c; }

  bool is_zero() const;
  Coeff augmentation() const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);

  bool operator==(const RingElement& o) const;

 private:
  FiniteGroup group_;
  std::vector<Coeff> coeffs_;
};

RingElement operator+(RingElement a, const RingElement& b);
RingElement operator-(RingElement a, const RingElement& b);
RingElement operator-(const RingElement& a);
RingElement operator*(const RingElement& a, const RingElement& b);
RingElement operator*(Coeff c, const RingElement& a);

RingElement add(const RingElement& a, const RingElement& b);
RingElement negate(const RingElement& a);
RingElement scalar_mul(Coeff c, const RingElement& a);
/// Convolution C(g) = sum_h A(h) B(h^-1 g); throws group_mismatch / overflow.
RingElement multiply(const RingElement& a, const RingElement& b);
/// A^(-1) = sum a_g g^-1.
RingElement involution(const RingElement& a);

ElementSet support(const RingElement& a);
/// Elements carrying coefficient -1.
ElementSet minus_one_positions(const RingElement& a);

/// True iff A is +-1 on every element of s and 0 elsewhere.
bool is_pm1_on(const RingElement& a, const ElementSet& s);
bool is_ternary(const RingElement& a);

/// Transport along a homomorphism: coefficients are summed over fibres, so
/// for an injective map this is relabeling and for a projection it is the
/// image in the quotient ring.
RingElement apply_map(const RingElement& a, const GroupMap& map);
RingElement pushforward(const RingElement& a, const GroupMap& proj);

/// Element-level equality test `a == c * 1`.
bool is_scalar(const RingElement& a, Coeff c);

/// Text form: one "<label> <coeff>" line per nonzero coefficient in index order.
std::string to_text(const RingElement& a);
RingElement ring_element_from_text(const FiniteGroup& g, const std::string& text);

/// Sum of c * label for display, e.g. "1+x-y-xy".
std::string to_expression(const RingElement& a);

}  // namespace hforge
