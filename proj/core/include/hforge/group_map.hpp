#pragma once

#include <optional>
#include <vector>

#include "hforge/finite_group.hpp"

namespace hforge {

/// A homomorphism given by the image of every source element.
struct GroupMap {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Element> images;

  Element operator()(Element g) const { return images[g]; }
  ElementSet image() const;
  bool is_injective() const;
  bool is_bijective() const;
};

/// Throws Error(verification) unless the map is multiplicative on every pair.
void check_homomorphism(const GroupMap& map);

/// Extends generator images along the Cayley graph of `source` (using its
/// named generators) and verifies the result is a homomorphism. Returns
/// nullopt when the images are inconsistent with the relations of `source`.
std::optional<GroupMap> extend_generator_images(const FiniteGroup& source, const FiniteGroup& target,
                                                const std::vector<Element>& generator_images);

GroupMap identity_map(const FiniteGroup& group);

/// Composition (second after first).
GroupMap compose(const GroupMap& second, const GroupMap& first);

/// Inverse of a bijective map.
GroupMap inverse(const GroupMap& map);

/// The subgroup on `elements` as a standalone group (elements renumbered in
/// increasing parent index, inheriting labels) together with its inclusion.
struct Subgroup {
  FiniteGroup group;
  GroupMap inclusion;
};
Subgroup subgroup_as_group(const FiniteGroup& parent, const ElementSet& elements);

/// Searches for an isomorphism that sends the named generators of `source`
/// to elements of `target` of matching orders. Only meant for small
/// generator counts (presentation matching of fixtures and transfer subgroups).
std::optional<GroupMap> find_isomorphism_by_generators(const FiniteGroup& source, const FiniteGroup& target);

}  // namespace hforge
