#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hforge/characters.hpp"
#include "hforge/finite_group.hpp"
#include "hforge/group_map.hpp"
#include "hforge/pta.hpp"
#include "hforge/ring.hpp"
#include "hforge/signatures.hpp"

namespace hforge {

/// G with normal K of index 2^r containing a normal E ~ C_2^r, and the
/// conjugation action of each coset representative of K on the characters of E.
struct DriskoInstance {
  FiniteGroup group;
  ElementSet normal_subgroup;
  ElemAbelianEmbedding e;
  std::vector<Element> coset_reps;               // minimal representatives, identity first
  std::vector<std::vector<std::uint32_t>> action;  // action[c][u] = mask of g_c chi_u g_c^-1
};

DriskoInstance make_drisko_instance(const FiniteGroup& g, const ElementSet& k, const ElemAbelianEmbedding& e);

/// Coset representatives g_u (indexed by the mask of u) with
/// {g_u chi_u g_u^-1} = {chi_u}. Backtracking, most constrained u first,
/// ties to the lowest mask, cosets tried in order of their representative.
std::vector<Element> drisko_coset_reps(const DriskoInstance& inst);

/// D = sum_u g_u A_u chi_u for blocks already living in ZG (supported on K).
RingElement assemble_prehadamard(const FiniteGroup& g, const ElementSet& k, const ElemAbelianEmbedding& e,
                                 const std::vector<RingElement>& blocks);
/// Same, with the signature set carried into G by an injective map whose
/// image is a normal subgroup of index 2^r.
RingElement assemble_prehadamard(const FiniteGroup& g, const SignatureSet& s, const GroupMap& emb);

/// Difference set in J x C_2^{d+1} for |J| = 2^{d+1}.
struct McFarlandResult {
  FiniteGroup group;
  RingElement d;
};
McFarlandResult mcfarland_construct(const FiniteGroup& j);

/// d+1 modulus-2 arrays whose supports multiply out to G; D = T_1...T_{d+1}.
struct PtaProduct {
  std::vector<Mod2Candidate> factors;
  RingElement d;
};
struct PtaProductResult {
  std::optional<PtaProduct> product;
  std::uint64_t nodes = 0;
  bool complete = true;
};
PtaProductResult pta_product_search(const FiniteGroup& g, const PtaSearchOptions& options = {});

/// Index-2 subgroup K (as a standalone group with its inclusion), g in K
/// central in G, and a signature set on K with respect to <g>.
RingElement cor_pta_ss_assemble(const FiniteGroup& g, const Subgroup& k, const SignatureSet& s);

/// D = sum A_u chi_u where the +-1/0 blocks have disjoint supports forming a
/// transversal of E in G and sum A_u chi_u A_u^(-1) = |G|/2^r.
RingElement modified_signature_assemble(const FiniteGroup& g, const ElemAbelianEmbedding& e,
                                        const std::vector<RingElement>& blocks);

struct FinalConditions {
  bool d0_pta = false;             // image of D0 in G/<g> is a PTA of modulus sqrt|G|/2
  bool d1_identity = false;        // D1 (1-g) D1^(-1) = |G|/4 (1-g)
  bool support_partition = false;  // supports of D0(1+g), D1(1-g) partition G
};
FinalConditions final_conditions(const FiniteGroup& g, Element central, const RingElement& d0, const RingElement& d1);

/// D = D0(1+g) + D1(1-g), each hypothesis checked with its own error code.
RingElement original_final_assemble(const FiniteGroup& g, Element central, const RingElement& d0,
                                    const RingElement& d1);

/// D1 D2 for an exact factorisation G = H1 H2, H1 n H2 = 1.
RingElement dillon_product(const FiniteGroup& g, const ElementSet& h1, const ElementSet& h2, const RingElement& d1,
                           const RingElement& d2);

/// D = sum g_u D_u with g_u the minimal coset representatives of K and
/// D_u in ZK (stored in the standalone subgroup numbering).
struct Decomposition {
  Subgroup k;
  std::vector<Element> reps;
  std::vector<RingElement> parts;
};
Decomposition decompose(const RingElement& d, const ElementSet& k);

struct TransferOptions {
  std::uint64_t node_budget = 100'000'000;
};
struct TransferResult {
  std::optional<RingElement> d;
  std::uint64_t nodes = 0;
  bool complete = true;
};

/// Searches transversals {g'_u} of K' in G' (g'_0 = 1) for which
/// sum g'_u iso(D_u) is a difference set. `iso` maps src.k.group onto kp.group.
TransferResult transfer_search(const Decomposition& src, const FiniteGroup& gp, const Subgroup& kp,
                               const GroupMap& iso, const TransferOptions& options = {});

}  // namespace hforge
