#include "hforge/characters.hpp"

#include <bit>

#include "hforge/error.hpp"

namespace hforge {

std::string CharacterIndex::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rank; ++i) s += bit(i) ? '1' : '0';
  return s;
}

CharacterIndex CharacterIndex::parse(const std::string& s) {
  require(!s.empty() && s.size() <= 31, Errc::parse, "character index must be 1..31 binary digits");
  CharacterIndex u{0, s.size()};
  for (std::size_t i = 0; i < s.size(); ++i) {
    require(s[i] == '0' || s[i] == '1', Errc::parse, "character index must be binary: " + s);
    if (s[i] == '1') u.bits |= 1u << i;
  }
  return u;
}

CharacterIndex concat(const CharacterIndex& a, const CharacterIndex& b) {
  require(a.rank + b.rank <= 31, Errc::invalid_argument, "character rank too large");
  return CharacterIndex{a.bits | (b.bits << a.rank), a.rank + b.rank};
}

std::vector<CharacterIndex> all_characters(std::size_t rank) {
  require(rank <= 20, Errc::invalid_argument, "character rank too large");
  std::vector<CharacterIndex> out;
  for (std::uint32_t m = 0; m < (1u << rank); ++m) out.push_back({m, rank});
  return out;
}

ElemAbelianEmbedding make_elem_abelian_embedding(const FiniteGroup& parent, std::vector<Element> basis) {
  const std::size_t r = basis.size();
  require(r <= 20, Errc::invalid_argument, "elementary abelian rank too large");
  for (std::size_t i = 0; i < r; ++i) {
    require(basis[i] < parent.order() && parent.element_order(basis[i]) == 2, Errc::invalid_argument,
            "basis element " + std::to_string(i + 1) + " is not an involution");
    for (std::size_t j = 0; j < i; ++j) {
      require(parent.mul(basis[i], basis[j]) == parent.mul(basis[j], basis[i]), Errc::not_abelian,
              "basis elements do not commute");
    }
  }
  std::vector<Element> by_mask(std::size_t{1} << r, 0);
  for (std::uint32_t m = 1; m < by_mask.size(); ++m) {
    std::uint32_t low = static_cast<std::uint32_t>(std::countr_zero(m));
    by_mask[m] = parent.mul(by_mask[m & (m - 1)], basis[low]);
  }
  ElementSet elements = make_set(by_mask);
  require(elements.size() == by_mask.size(), Errc::invalid_argument, "basis elements are not independent");
  return ElemAbelianEmbedding{parent, std::move(basis), std::move(by_mask), std::move(elements)};
}

ElemAbelianEmbedding map_embedding(const ElemAbelianEmbedding& e, const GroupMap& map) {
  require(map.source == e.parent, Errc::group_mismatch, "map source is not the embedding's parent");
  std::vector<Element> basis;
  for (Element b : e.basis) basis.push_back(map(b));
  return make_elem_abelian_embedding(map.target, std::move(basis));
}

RingElement character_element(const ElemAbelianEmbedding& e, const CharacterIndex& u) {
  require(u.rank == e.rank(), Errc::invalid_argument, "character rank does not match the embedding");
  RingElement chi(e.parent);
  for (std::uint32_t m = 0; m < e.by_mask.size(); ++m) {
    chi.set(e.by_mask[m], std::popcount(m & u.bits) % 2 == 0 ? 1 : -1);
  }
  return chi;
}

std::optional<CharacterIndex> find_character(const ElemAbelianEmbedding& e, const RingElement& a) {
  CharacterIndex u{0, e.rank()};
  for (std::size_t i = 0; i < e.rank(); ++i) {
    Coeff c = a[e.basis[i]];
    if (c == -1) {
      u.bits |= 1u << i;
    } else if (c != 1) {
      return std::nullopt;
    }
  }
  if (character_element(e, u) == a) return u;
  return std::nullopt;
}

}  // namespace hforge
