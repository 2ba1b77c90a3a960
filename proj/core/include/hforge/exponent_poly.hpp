#pragma once

#include <map>
#include <string>
#include <vector>

#include "hforge/abelian.hpp"
#include "hforge/group_map.hpp"
#include "hforge/ring.hpp"

namespace hforge {

/// A group-ring element on an abelian group written as a Laurent polynomial
/// in the cyclic generators, with exponents reduced mod the factor orders.
/// Zero coefficients are never stored.
class ExponentPoly {
 public:
  explicit ExponentPoly(AbelianGroup group) : group_(std::move(group)) {}

  static ExponentPoly constant(const AbelianGroup& g, Coeff c);
  static ExponentPoly monomial(const AbelianGroup& g, const Exponents& e, Coeff c = 1);
  /// The i-th generator raised to `power`.
  static ExponentPoly generator_power(const AbelianGroup& g, std::size_t i, long long power, Coeff c = 1);

  const AbelianGroup& group() const noexcept { return group_; }
  const std::map<Exponents, Coeff>& terms() const noexcept { return terms_; }
  Coeff coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, Coeff c);

  ExponentPoly& operator+=(const ExponentPoly& o);
  ExponentPoly& operator-=(const ExponentPoly& o);
  bool operator==(const ExponentPoly& o) const { return group_ == o.group_ && terms_ == o.terms_; }

 private:
  AbelianGroup group_;
  std::map<Exponents, Coeff> terms_;
};

ExponentPoly operator+(ExponentPoly a, const ExponentPoly& b);
ExponentPoly operator-(ExponentPoly a, const ExponentPoly& b);
ExponentPoly operator-(const ExponentPoly& a);
ExponentPoly operator*(const ExponentPoly& a, const ExponentPoly& b);
ExponentPoly operator*(Coeff c, const ExponentPoly& a);

/// Rewrites every monomial through generator_images[i] (the exponent tuple
/// in `target` that source generator i is sent to). Exponents are taken as
/// stored, 0 <= e_i < o_i, and the result is reduced mod the target orders.
ExponentPoly substitute(const ExponentPoly& p, const std::vector<Exponents>& generator_images,
                        const AbelianGroup& target);

/// Ring element on abelian_group(p.group()) (same indexing).
RingElement to_ring_element(const ExponentPoly& p, const FiniteGroup& carrier);
ExponentPoly from_ring_element(const RingElement& a, const AbelianGroup& group);

/// Transports p along an injective map whose source is abelian_group(p.group()).
RingElement embed(const ExponentPoly& p, const GroupMap& emb);

/// Display with the default generator names, e.g. "1+x+y^2-xy^2".
std::string to_string(const ExponentPoly& p);

}  // namespace hforge
