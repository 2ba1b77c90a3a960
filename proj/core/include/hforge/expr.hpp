#pragma once

#include <string>

#include "hforge/finite_group.hpp"
#include "hforge/ring.hpp"

namespace hforge {

/// Parses a group-ring expression over the named generators of g, e.g.
/// "(1+x^8)(x^6-x^5) - 2xy^-1". Juxtaposition multiplies, `^` takes an
/// integer exponent (negative only on group elements). Throws Error(parse).
RingElement parse_ring_expression(const FiniteGroup& g, const std::string& text);

/// The group element denoted by a monomial word such as "x^3y".
Element parse_element(const FiniteGroup& g, const std::string& text);

/// Builds a group from a builder expression: factors joined by 'x' or '*',
/// each one of C<n>, E<r> (= C2^r), D<n>, Q<n>, SD<n>, M<n>,
/// semidirect(m,n,k) or metacyclic(m,n,k,t). Example: "Q8xC2".
FiniteGroup parse_group_expression(const std::string& text);

}  // namespace hforge
