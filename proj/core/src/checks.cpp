#include "hforge/checks.hpp"

#include "hforge/abelian.hpp"
#include "hforge/error.hpp"
#include "hforge/structure.hpp"

namespace hforge {

HadamardParams hadamard_params(int d, int sign) {
  require(d >= 0 && d <= 28, Errc::invalid_argument, "d out of range");
  require(sign == 1 || sign == -1, Errc::invalid_argument, "sign must be +1 or -1");
  HadamardParams p;
  p.d = d;
  p.N = sign * (1LL << d);
  p.v = 4 * p.N * p.N;
  p.k = 2 * p.N * p.N - p.N;
  p.lambda = p.N * p.N - p.N;
  p.n = p.k - p.lambda;
  return p;
}

HadamardParams complement_params(const HadamardParams& p) { return hadamard_params(p.d, p.N > 0 ? -1 : 1); }

std::optional<int> hadamard_d(std::size_t order) {
  if (!is_power_of_two(order)) return std::nullopt;
  int e = log2_exact(order);
  if (e < 2 || e % 2 != 0) return std::nullopt;
  return (e - 2) / 2;
}

std::string_view to_string(DsFailure f) {
  switch (f) {
    case DsFailure::none: return "none";
    case DsFailure::wrong_order: return "wrong-order";
    case DsFailure::not_pm1: return "not-pm1";
    case DsFailure::autocorrelation: return "autocorrelation";
  }
  return "unknown";
}

DsVerdict verify_hadamard_ds(const RingElement& d) {
  DsVerdict v;
  const FiniteGroup& g = d.group();
  auto dd = hadamard_d(g.order());
  if (!dd) {
    v.failure = DsFailure::wrong_order;
    return v;
  }
  if (!is_pm1_on(d, whole_group(g))) {
    v.failure = DsFailure::not_pm1;
    return v;
  }
  // -1 count 2N^2 - N picks the sign of N
  long long minus = static_cast<long long>(minus_one_positions(d).size());
  HadamardParams pos = hadamard_params(*dd, 1);
  v.params = minus == pos.k ? pos : hadamard_params(*dd, -1);
  if (!is_scalar(multiply(d, involution(d)), static_cast<Coeff>(g.order()))) {
    v.failure = DsFailure::autocorrelation;
    return v;
  }
  v.valid = true;
  return v;
}

bool is_hadamard_ds(const RingElement& d) { return verify_hadamard_ds(d).valid; }

bool is_hadamard_ds(const FiniteGroup& g, const ElementSet& subset) {
  return is_hadamard_ds(RingElement::from_subset(g, subset));
}

bool subset_identity_holds(const FiniteGroup& g, const ElementSet& subset) {
  auto dd = hadamard_d(g.order());
  if (!dd) return false;
  const long long k = static_cast<long long>(subset.size());
  HadamardParams p = hadamard_params(*dd, 1);
  if (k != p.k) p = hadamard_params(*dd, -1);
  if (k != p.k) return false;
  RingElement s = RingElement::sum_of(g, subset);
  RingElement prod = multiply(s, involution(s));
  if (prod[0] != p.n + p.lambda) return false;
  for (Element h = 1; h < g.order(); ++h) {
    if (prod[h] != p.lambda) return false;
  }
  return true;
}

RingElement complement_ds(const RingElement& d) { return negate(d); }

bool is_pta(const RingElement& t, long long m) {
  if (!is_ternary(t)) return false;
  return is_scalar(multiply(t, involution(t)), m * m);
}

bool is_transversal_support(const RingElement& a, const ElemAbelianEmbedding& e) {
  const FiniteGroup& k = a.group();
  auto idx = coset_index(k, e.elements);
  const std::size_t cosets = k.order() / e.elements.size();
  std::vector<char> hit(cosets, 0);
  std::size_t count = 0;
  for (Element h = 0; h < k.order(); ++h) {
    if (a[h] == 0) continue;
    if (hit[idx[h]]) return false;
    hit[idx[h]] = 1;
    ++count;
  }
  return count == cosets;
}

bool is_signature_block(const FiniteGroup& k, const ElemAbelianEmbedding& e, const CharacterIndex& u,
                        const RingElement& a) {
  require(e.parent == k && a.group() == k, Errc::group_mismatch, "block, subgroup and carrier must share a group");
  require(is_normal(k, e.elements), Errc::not_normal, "E is not normal in K");
  if (!is_ternary(a) || !is_transversal_support(a, e)) return false;
  RingElement chi = character_element(e, u);
  RingElement lhs = multiply(multiply(a, chi), involution(a));
  const Coeff scale = static_cast<Coeff>(k.order() >> e.rank());
  return lhs == scalar_mul(scale, chi);
}

std::string_view to_string(ExclusionKind k) {
  switch (k) {
    case ExclusionKind::none: return "none";
    case ExclusionKind::turyn: return "turyn";
    case ExclusionKind::dillon: return "dillon";
  }
  return "unknown";
}

namespace {

std::size_t exclusion_bound(const FiniteGroup& g) {
  auto d = hadamard_d(g.order());
  require(d.has_value(), Errc::invalid_argument, "group order must be 2^(2d+2)");
  // |K| < 2^d
  return (std::size_t{1} << *d) / 2;
}

std::optional<ExclusionWitness> scan(const FiniteGroup& g, bool turyn, bool dillon) {
  const std::size_t bound = exclusion_bound(g);
  if (bound == 0) return std::nullopt;
  for (const auto& k : find_normal_subgroups_up_to(g, bound)) {
    Quotient q = quotient(g, k);
    if (turyn && is_cyclic(q.group)) return ExclusionWitness{ExclusionKind::turyn, k};
    if (dillon && is_dihedral(q.group)) return ExclusionWitness{ExclusionKind::dillon, k};
  }
  return std::nullopt;
}

}  // namespace

std::optional<ExclusionWitness> exclusion_witness(const FiniteGroup& g) { return scan(g, true, true); }
bool turyn_excluded(const FiniteGroup& g) { return scan(g, true, false).has_value(); }
bool dillon_excluded(const FiniteGroup& g) { return scan(g, false, true).has_value(); }

bool turyn_exponent_check(const FiniteGroup& g) {
  require(is_abelian(g), Errc::not_abelian, "exponent criterion applies to abelian groups");
  auto d = hadamard_d(g.order());
  require(d.has_value(), Errc::invalid_argument, "group order must be 2^(2d+2)");
  return exponent(g) <= (std::size_t{1} << (*d + 2));
}

bool minus_one_count_check(const RingElement& b, const CharacterIndex& u, std::size_t r) {
  const std::size_t k = b.group().order();
  require(is_pm1_on(b, whole_group(b.group())), Errc::precondition, "B_u must be +-1 on K");
  const long long minus = static_cast<long long>(minus_one_positions(b).size());
  const long long half = static_cast<long long>(k / 2);
  if (!u.is_principal()) return minus == half;
  // (count - |K|/2)^2 = 2^{r-2} |K|
  long long dev = minus - half;
  unsigned long long sq = static_cast<unsigned long long>(dev * dev);
  unsigned long long want = r >= 2 ? static_cast<unsigned long long>(k) << (r - 2) : static_cast<unsigned long long>(k) >> (2 - r);
  if (r < 2 && (k % (std::size_t{1} << (2 - r))) != 0) return false;
  return sq == want;
}

}  // namespace hforge
