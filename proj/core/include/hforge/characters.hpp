#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hforge/finite_group.hpp"
#include "hforge/group_map.hpp"
#include "hforge/ring.hpp"

namespace hforge {

/// u in GF(2)^r. Bit i-1 of `bits` holds u_i; rendered as "u1u2...ur".
struct CharacterIndex {
  std::uint32_t bits = 0;
  std::size_t rank = 0;

  bool bit(std::size_t i) const { return (bits >> i) & 1u; }
  bool is_principal() const { return bits == 0; }
  std::string to_string() const;
  static CharacterIndex parse(const std::string& s);

  auto operator<=>(const CharacterIndex&) const = default;
};

/// Concatenation with `a`'s bits first.
CharacterIndex concat(const CharacterIndex& a, const CharacterIndex& b);
std::vector<CharacterIndex> all_characters(std::size_t rank);

/// E = <x_1,...,x_r> ~ C_2^r inside a parent group. elements[mask] is the
/// product of the basis elements selected by mask.
struct ElemAbelianEmbedding {
  FiniteGroup parent;
  std::vector<Element> basis;
  std::vector<Element> by_mask;
  ElementSet elements;

  std::size_t rank() const { return basis.size(); }
  Element element(std::uint32_t mask) const { return by_mask[mask]; }
};

/// Validates order 2, pairwise commutation and independence of the basis.
ElemAbelianEmbedding make_elem_abelian_embedding(const FiniteGroup& parent, std::vector<Element> basis);

/// Transports E along an injective homomorphism.
ElemAbelianEmbedding map_embedding(const ElemAbelianEmbedding& e, const GroupMap& map);

/// chi_u = prod (1 + (-1)^{u_i} x_i) as an element of Z[parent].
RingElement character_element(const ElemAbelianEmbedding& e, const CharacterIndex& u);

/// The index u with chi_u == a, if a is one of the characters of E.
std::optional<CharacterIndex> find_character(const ElemAbelianEmbedding& e, const RingElement& a);

}  // namespace hforge
