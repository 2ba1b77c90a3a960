#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hforge/finite_group.hpp"
#include "hforge/group_map.hpp"

namespace hforge {

std::size_t element_order(const FiniteGroup& g, Element x);
std::size_t exponent(const FiniteGroup& g);

/// g h g^-1
Element conjugate(const FiniteGroup& g, Element by, Element h);

ElementSet center(const FiniteGroup& g);
ElementSet whole_group(const FiniteGroup& g);
ElementSet subgroup_generated(const FiniteGroup& g, const std::vector<Element>& gens);
std::vector<ElementSet> conjugacy_classes(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
/// Predicates below throw Error(not_closed) when `s` is not a subgroup.
bool is_normal(const FiniteGroup& g, const ElementSet& s);
bool is_abelian(const FiniteGroup& g, const ElementSet& s);
bool is_cyclic(const FiniteGroup& g, const ElementSet& s);
bool is_dihedral(const FiniteGroup& g, const ElementSet& s);
bool is_elementary_abelian(const FiniteGroup& g, const ElementSet& s, std::size_t rank);

bool is_abelian(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);
bool is_dihedral(const FiniteGroup& g);

/// Invariant factors n_1 >= n_2 >= ... (each dividing the previous) of an
/// abelian subgroup; throws Error(not_abelian) otherwise.
std::vector<std::size_t> abelian_invariants(const FiniteGroup& g, const ElementSet& s);
std::vector<std::size_t> abelian_invariants(const FiniteGroup& g);

/// Minimal element of each left coset gS, in increasing order. The first
/// representative is always the identity.
std::vector<Element> coset_representatives(const FiniteGroup& g, const ElementSet& s);

/// For every element, the position of its left coset in coset_representatives().
std::vector<std::size_t> coset_index(const FiniteGroup& g, const ElementSet& s);

struct Quotient {
  FiniteGroup group;
  GroupMap projection;
};
/// G/N on minimal coset representatives; throws Error(not_normal).
Quotient quotient(const FiniteGroup& g, const ElementSet& n);

/// Subgroup generated by the squares; the Frattini subgroup of a 2-group.
ElementSet square_subgroup(const FiniteGroup& g);

/// Every subgroup of index 2 of a 2-group, sorted.
std::vector<ElementSet> index_two_subgroups(const FiniteGroup& g);

/// All normal subgroups of order <= max_order (max_order <= 8).
std::vector<ElementSet> find_normal_subgroups_up_to(const FiniteGroup& g, std::size_t max_order);

struct NormalAbelianSubgroup {
  ElementSet elements;
  GroupMap embedding;  // from abelian_group(invariants) into g
};

/// A normal abelian subgroup with exactly the given invariant factors
/// (non-increasing list), or nullopt when none exists.
std::optional<NormalAbelianSubgroup> find_normal_abelian_subgroup(const FiniteGroup& g,
                                                                  const std::vector<std::size_t>& invariants);

/// Order statistics, center size, distinct squares and derived length data;
/// used to tell small catalog groups apart without an isomorphism test.
std::vector<std::size_t> structure_fingerprint(const FiniteGroup& g);

}  // namespace hforge
