#pragma once

#include <optional>
#include <string>

#include "hforge/characters.hpp"
#include "hforge/finite_group.hpp"
#include "hforge/ring.hpp"

namespace hforge {

/// (v, k, lambda) = (4N^2, 2N^2 - N, N^2 - N), n = k - lambda = N^2, N = +-2^d.
struct HadamardParams {
  int d = 0;
  long long N = 1;
  long long v = 4, k = 1, lambda = 0, n = 1;

  bool operator==(const HadamardParams&) const = default;
};

HadamardParams hadamard_params(int d, int sign = +1);
/// Parameters of the complementary set (N -> -N).
HadamardParams complement_params(const HadamardParams& p);
/// d with |G| = 2^{2d+2}, or nullopt for other orders.
std::optional<int> hadamard_d(std::size_t order);

enum class DsFailure {
  none,
  wrong_order,      // |G| is not 2^{2d+2}
  not_pm1,          // D takes a value other than +-1 somewhere
  autocorrelation,  // D D^(-1) != |G|
};
std::string_view to_string(DsFailure f);

struct DsVerdict {
  bool valid = false;
  std::optional<HadamardParams> params;  // sign chosen from the subset size
  DsFailure failure = DsFailure::none;
};

/// D in +-1 form; valid iff D is +-1 everywhere and D D^(-1) = |G|.
DsVerdict verify_hadamard_ds(const RingElement& d);
bool is_hadamard_ds(const RingElement& d);
/// Subset form: the -1 positions of the +-1 function.
bool is_hadamard_ds(const FiniteGroup& g, const ElementSet& subset);

/// Independent check on the 0/1 form: D D^(-1) = n + lambda G.
bool subset_identity_holds(const FiniteGroup& g, const ElementSet& subset);

RingElement complement_ds(const RingElement& d);

/// Coefficients in {-1, 0, 1} and T T^(-1) = m^2.
bool is_pta(const RingElement& t, long long m);

/// True iff A is +-1 on a transversal of E in K, 0 elsewhere, and
/// A chi_u A^(-1) = (|K|/2^r) chi_u. Throws Error(not_normal) when E is not normal.
bool is_signature_block(const FiniteGroup& k, const ElemAbelianEmbedding& e, const CharacterIndex& u,
                        const RingElement& a);
/// True when the support of `a` meets every left coset of E exactly once.
bool is_transversal_support(const RingElement& a, const ElemAbelianEmbedding& e);

enum class ExclusionKind { none, turyn, dillon };
std::string_view to_string(ExclusionKind k);

struct ExclusionWitness {
  ExclusionKind kind = ExclusionKind::none;
  ElementSet kernel;
};

/// Normal K with |K| < 2^d and G/K cyclic (Turyn) or dihedral (Dillon).
/// Throws invalid_argument unless |G| = 2^{2d+2}.
std::optional<ExclusionWitness> exclusion_witness(const FiniteGroup& g);
bool turyn_excluded(const FiniteGroup& g);
bool dillon_excluded(const FiniteGroup& g);

/// Abelian G of order 2^{2d+2}: exponent <= 2^{d+2}. Throws not_abelian.
bool turyn_exponent_check(const FiniteGroup& g);

/// Number of -1 coefficients of B_u = A_u chi_u on K: |K|/2 for u != 0 and
/// |K|/2 +- sqrt(2^{r-2}|K|) for u = 0. Throws precondition if B is not +-1.
bool minus_one_count_check(const RingElement& b, const CharacterIndex& u, std::size_t r);

}  // namespace hforge
