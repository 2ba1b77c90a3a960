#pragma once

#include <optional>
#include <vector>

#include "hforge/abelian.hpp"
#include "hforge/characters.hpp"
#include "hforge/exponent_poly.hpp"
#include "hforge/finite_group.hpp"
#include "hforge/group_map.hpp"
#include "hforge/pta.hpp"
#include "hforge/ring.hpp"

namespace hforge {

/// Blocks A_u on a carrier K with respect to E ~ C_2^r, stored by the
/// bitmask of u. Repeated blocks are kept as given.
struct SignatureSet {
  FiniteGroup carrier;
  ElemAbelianEmbedding subgroup;
  std::vector<RingElement> blocks;

  std::size_t rank() const { return subgroup.rank(); }
  const RingElement& block(const CharacterIndex& u) const { return blocks.at(u.bits); }
};

/// Checks every block; returns the first failing index.
std::optional<CharacterIndex> first_failing_block(const SignatureSet& s);
/// Throws Error(verification) unless every block passes is_signature_block.
void verify_signature_set(const SignatureSet& s);

/// Products B_u = A_u chi_u.
std::vector<RingElement> signature_products(const SignatureSet& s);

SignatureSet trivial_signature_set(std::size_t r);

/// Blocks A_u * alpha_v on K_r x K_s, index u then v.
SignatureSet signature_product(const SignatureSet& s1, const SignatureSet& s2);

/// Polynomial form of the abelian recursion. Orders may be listed in any
/// order; the recursion keeps generator positions fixed.
struct AbelianSignaturePolys {
  AbelianGroup group;
  std::vector<ExponentPoly> blocks;  // by character bitmask
};

/// True when the sorted orders form a valid (d, r) tuple:
/// 2 <= r <= d+1, a_1 <= d-r+2, sum a_i = 2d-r+2.
bool valid_abelian_tuple(int d, const std::vector<std::size_t>& orders);
/// Every valid non-increasing order tuple for this d.
std::vector<std::vector<std::size_t>> valid_abelian_tuples(int d);

AbelianSignaturePolys abelian_signature_polys(int d, const std::vector<std::size_t>& orders);
/// Verified set on abelian_group(orders) with respect to its C_2^r.
SignatureSet abelian_signature_set(int d, const std::vector<std::size_t>& orders);
SignatureSet to_signature_set(const AbelianSignaturePolys& p);

/// {A, A} with A = 1 - x - y - xy on Q_8 with respect to <x^2>.
SignatureSet quaternion_signature_set();

/// {D, D} on H x C_2 with respect to the new factor; D must be a verified
/// Hadamard difference set in H.
SignatureSet hds_times_c2_signature_set(const FiniteGroup& h, const RingElement& d);

/// {T, T}, T = T_1...T_d, with respect to <g>; |K| = 2^{2d+1}, g central.
/// Throws pta_failure or support_failure naming the failed hypothesis.
SignatureSet pta_signature_set(const FiniteGroup& k, Element g, const std::vector<Mod2Candidate>& factors);

std::optional<SignatureSet> pta_search_for_signature(const FiniteGroup& k, Element g,
                                                     const PtaSearchOptions& options = {});

/// Checks A chi_u A^(-1) = 2^{2j} chi_u via a modulus-2^j array in K/H.
struct QuotientBlock {
  RingElement block;
  int j = 0;
  bool is_signature_block = false;  // E has index 2^{2j} and A is +-1 on a transversal
};
QuotientBlock block_from_quotient_pta(const FiniteGroup& k, const ElemAbelianEmbedding& e, const CharacterIndex& u,
                                      const ElementSet& kernel, const RingElement& a);

/// sigma(A) as a block for sigma(chi_u); sigma must be an automorphism of K fixing E.
struct MappedBlock {
  CharacterIndex index;
  RingElement block;
};
MappedBlock map_block(const GroupMap& sigma, const ElemAbelianEmbedding& e, const CharacterIndex& u,
                      const RingElement& a);

/// Transports a signature set along an injective homomorphism K -> K'.
SignatureSet map_signature_set(const SignatureSet& s, const GroupMap& emb);

}  // namespace hforge
