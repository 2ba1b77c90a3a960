#include "hforge/signatures.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hforge/builders.hpp"
#include "hforge/checks.hpp"
#include "hforge/error.hpp"
#include "hforge/structure.hpp"

namespace hforge {

std::optional<CharacterIndex> first_failing_block(const SignatureSet& s) {
  require(s.blocks.size() == (std::size_t{1} << s.rank()), Errc::invalid_argument, "signature set needs 2^r blocks");
  for (const auto& u : all_characters(s.rank())) {
    if (!is_signature_block(s.carrier, s.subgroup, u, s.blocks[u.bits])) return u;
  }
  return std::nullopt;
}

void verify_signature_set(const SignatureSet& s) {
  if (auto bad = first_failing_block(s)) {
    fail(Errc::verification, "block " + bad->to_string() + " is not a signature block");
  }
}

std::vector<RingElement> signature_products(const SignatureSet& s) {
  std::vector<RingElement> out;
  for (const auto& u : all_characters(s.rank())) {
    out.push_back(multiply(s.blocks[u.bits], character_element(s.subgroup, u)));
  }
  return out;
}

SignatureSet trivial_signature_set(std::size_t r) {
  require(r >= 1, Errc::invalid_argument, "trivial signature set needs r >= 1");
  FiniteGroup k = elementary_abelian(r);
  std::vector<Element> basis;
  for (const auto& gen : k.generators()) basis.push_back(gen.element);
  auto e = make_elem_abelian_embedding(k, basis);
  SignatureSet s{k, e, std::vector<RingElement>(std::size_t{1} << r, RingElement::one(k))};
  verify_signature_set(s);
  return s;
}

namespace {

// Coefficients of a (x) b on the direct product (index a + |A| b).
RingElement tensor(const FiniteGroup& prod, const RingElement& a, const RingElement& b) {
  const std::size_t na = a.group().order();
  RingElement out(prod);
  for (Element i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    for (Element j = 0; j < b.group().order(); ++j) {
      if (b[j] != 0) out.set(static_cast<Element>(i + na * j), a[i] * b[j]);
    }
  }
  return out;
}

}  // namespace

SignatureSet signature_product(const SignatureSet& s1, const SignatureSet& s2) {
  verify_signature_set(s1);
  verify_signature_set(s2);
  FiniteGroup prod = direct_product(s1.carrier, s2.carrier);
  const Element n1 = static_cast<Element>(s1.carrier.order());
  std::vector<Element> basis(s1.subgroup.basis.begin(), s1.subgroup.basis.end());
  for (Element b : s2.subgroup.basis) basis.push_back(n1 * b);
  auto e = make_elem_abelian_embedding(prod, basis);
  std::vector<RingElement> blocks;
  const std::size_t r = s1.rank();
  for (const auto& w : all_characters(r + s2.rank())) {
    std::uint32_t u = w.bits & ((1u << r) - 1);
    std::uint32_t v = w.bits >> r;
    blocks.push_back(tensor(prod, s1.blocks[u], s2.blocks[v]));
  }
  SignatureSet s{prod, e, std::move(blocks)};
  verify_signature_set(s);
  return s;
}

bool valid_abelian_tuple(int d, const std::vector<std::size_t>& orders) {
  if (d < 1) return false;
  const int r = static_cast<int>(orders.size());
  if (r < 2 || r > d + 1) return false;
  int sum = 0;
  for (std::size_t o : orders) {
    if (o < 2 || !is_power_of_two(o)) return false;
    int a = log2_exact(o);
    if (a > d - r + 2) return false;
    sum += a;
  }
  return sum == 2 * d - r + 2;
}

std::vector<std::vector<std::size_t>> valid_abelian_tuples(int d) {
  std::vector<std::vector<std::size_t>> out;
  for (int r = d + 1; r >= 2; --r) {
    const int cap = d - r + 2;
    const int total = 2 * d - r + 2;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
      if (static_cast<int>(parts.size()) == r) {
        if (remaining == 0) {
          std::vector<std::size_t> orders;
          for (int a : parts) orders.push_back(std::size_t{1} << a);
          out.push_back(orders);
        }
        return;
      }
      for (int a = std::min(maxpart, remaining); a >= 1; --a) {
        parts.push_back(a);
        rec(remaining - a, a);
        parts.pop_back();
      }
    };
    rec(total, cap);
  }
  // larger exponent first, matching a1 >= a2 >= ... reading order
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a > b;
  });
  return out;
}

namespace {

std::uint32_t remove_bit(std::uint32_t mask, std::size_t pos) {
  std::uint32_t low = mask & ((1u << pos) - 1);
  return low | ((mask >> (pos + 1)) << pos);
}

AbelianSignaturePolys recurse(int d, const std::vector<std::size_t>& orders) {
  const std::size_t r = orders.size();
  AbelianGroup group(orders);
  if (d == 1) {
    require(r == 2 && orders[0] == 2 && orders[1] == 2, Errc::internal, "base case must be C2 x C2");
    return {group, std::vector<ExponentPoly>(4, ExponentPoly::constant(group, 1))};
  }
  std::vector<std::size_t> pos(r);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  std::stable_sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) { return orders[a] > orders[b]; });

  if (orders[pos.back()] == 2) {
    // product with a trivial set on the C2 factor at position p
    const std::size_t p = pos.back();
    std::vector<std::size_t> inner_orders = orders;
    inner_orders.erase(inner_orders.begin() + static_cast<long>(p));
    AbelianSignaturePolys inner = recurse(d - 1, inner_orders);
    std::vector<ExponentPoly> blocks;
    for (std::uint32_t m = 0; m < (1u << r); ++m) {
      ExponentPoly out(group);
      for (const auto& [e, c] : inner.blocks[remove_bit(m, p)].terms()) {
        Exponents f = e;
        f.insert(f.begin() + static_cast<long>(p), 0);
        out.add_term(f, c);
      }
      blocks.push_back(std::move(out));
    }
    return {group, std::move(blocks)};
  }

  const std::size_t px = pos[0];
  const std::size_t py = pos[1];
  const int a1 = log2_exact(orders[px]);
  const int a2 = log2_exact(orders[py]);
  std::vector<std::size_t> inner_orders = orders;
  inner_orders[px] /= 2;
  inner_orders[py] /= 2;
  AbelianSignaturePolys inner = recurse(d - 1, inner_orders);

  auto unit_images = [&] {
    std::vector<Exponents> imgs(r, Exponents(r, 0));
    for (std::size_t i = 0; i < r; ++i) imgs[i][i] = 1;
    return imgs;
  };
  auto s_xy2 = unit_images();
  s_xy2[py][py] = 2;
  auto s_x2y = unit_images();
  s_x2y[px][px] = 2;
  auto s_x2xy = unit_images();
  s_x2xy[px][px] = 2;
  s_x2xy[py][px] = 1LL << (a1 - a2);

  const auto one = ExponentPoly::constant(group, 1);
  const auto gx = ExponentPoly::generator_power(group, px, 1);
  const auto gy = ExponentPoly::generator_power(group, py, 1);
  const auto c1 = ExponentPoly::generator_power(group, px, 1LL << (a1 - 2));
  const auto c2 = ExponentPoly::generator_power(group, py, 1LL << (a2 - 2));
  const auto c12 = c1 * c2;

  auto A = [&](std::uint32_t v, std::uint32_t i, std::uint32_t j) -> const ExponentPoly& {
    std::uint32_t m = v & ~((1u << px) | (1u << py));
    m |= i << px;
    m |= j << py;
    return inner.blocks[m];
  };

  std::vector<ExponentPoly> blocks(std::size_t{1} << r, ExponentPoly(group));
  for (std::uint32_t m = 0; m < (1u << r); ++m) {
    const std::uint32_t i = (m >> px) & 1u;
    const std::uint32_t j = (m >> py) & 1u;
    if (i == 0) {
      blocks[m] = (one + c1) * substitute(A(m, 0, j), s_xy2, group) +
                  gy * (one - c1) * substitute(A(m, 1, j), s_xy2, group);
    } else if (j == 0) {
      blocks[m] = (one + c2) * substitute(A(m, 1, 0), s_x2y, group) +
                  gx * (one - c2) * substitute(A(m, 1, 1), s_x2y, group);
    } else {
      blocks[m] = (one + c12) * substitute(A(m, 1, 0), s_x2xy, group) +
                  gx * (one - c12) * substitute(A(m, 1, 1), s_x2xy, group);
    }
  }
  return {group, std::move(blocks)};
}

}  // namespace

AbelianSignaturePolys abelian_signature_polys(int d, const std::vector<std::size_t>& orders) {
  std::vector<std::size_t> sorted = orders;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  require(valid_abelian_tuple(d, sorted), Errc::invalid_argument,
          "orders do not form a valid tuple for d=" + std::to_string(d));
  return recurse(d, orders);
}

SignatureSet to_signature_set(const AbelianSignaturePolys& p) {
  FiniteGroup k = abelian_group(p.group);
  std::vector<Element> basis;
  for (std::size_t i = 0; i < p.group.rank(); ++i) {
    Exponents e(p.group.rank(), 0);
    e[i] = static_cast<long long>(p.group.orders()[i] / 2);
    basis.push_back(p.group.index(e));
  }
  auto e = make_elem_abelian_embedding(k, basis);
  std::vector<RingElement> blocks;
  for (const auto& b : p.blocks) blocks.push_back(to_ring_element(b, k));
  return SignatureSet{k, e, std::move(blocks)};
}

SignatureSet abelian_signature_set(int d, const std::vector<std::size_t>& orders) {
  SignatureSet s = to_signature_set(abelian_signature_polys(d, orders));
  verify_signature_set(s);
  return s;
}

SignatureSet quaternion_signature_set() {
  FiniteGroup q = quaternion8();
  const Element x = *q.generator("x");
  const Element y = *q.generator("y");
  auto e = make_elem_abelian_embedding(q, {q.mul(x, x)});
  RingElement a = mod2_element(q, x, y);
  SignatureSet s{q, e, {a, a}};
  verify_signature_set(s);
  return s;
}

SignatureSet hds_times_c2_signature_set(const FiniteGroup& h, const RingElement& d) {
  require(d.group() == h, Errc::group_mismatch, "difference set does not live in H");
  require(is_hadamard_ds(d), Errc::verification, "input is not a Hadamard difference set");
  FiniteGroup prod = direct_product(h, cyclic(2, "t"));
  const Element t = static_cast<Element>(h.order());
  auto e = make_elem_abelian_embedding(prod, {t});
  RingElement block(prod);
  for (Element i = 0; i < h.order(); ++i) block.set(i, d[i]);
  SignatureSet s{prod, e, {block, block}};
  verify_signature_set(s);
  return s;
}

namespace {

bool is_central(const FiniteGroup& k, Element g) {
  for (const auto& gen : k.generators()) {
    if (k.mul(g, gen.element) != k.mul(gen.element, g)) return false;
  }
  return true;
}

}  // namespace

SignatureSet pta_signature_set(const FiniteGroup& k, Element g, const std::vector<Mod2Candidate>& factors) {
  const std::size_t d = factors.size();
  require(k.order() == (std::size_t{1} << (2 * d + 1)), Errc::precondition, "|K| must be 2^(2d+1) for d factors");
  require(g < k.order() && k.element_order(g) == 2 && is_central(k, g), Errc::precondition,
          "g must be a central involution");
  RingElement cover = RingElement::sum_of(k, {0, g});
  for (const auto& f : factors) {
    require(is_pta(mod2_element(k, f.x, f.y), 2), Errc::pta_failure, "factor is not a modulus-2 perfect ternary array");
    cover = multiply(cover, RingElement::sum_of(k, make_set({0, f.x, f.y, k.mul(f.x, f.y)})));
  }
  require(cover == RingElement(k, std::vector<Coeff>(k.order(), 1)), Errc::support_failure,
          "(1+g) times the factor supports does not cover K exactly once");
  auto e = make_elem_abelian_embedding(k, {g});
  RingElement t = pta_product(k, factors);
  SignatureSet s{k, e, {t, t}};
  verify_signature_set(s);
  return s;
}

std::optional<SignatureSet> pta_search_for_signature(const FiniteGroup& k, Element g, const PtaSearchOptions& options) {
  require(is_power_of_two(k.order()) && log2_exact(k.order()) % 2 == 1, Errc::precondition,
          "|K| must be 2^(2d+1)");
  require(g < k.order() && k.element_order(g) == 2 && is_central(k, g), Errc::precondition,
          "g must be a central involution");
  const std::size_t d = static_cast<std::size_t>(log2_exact(k.order()) - 1) / 2;
  auto res = search_pta_factors(k, {0, g}, d, options);
  if (!res.factors) return std::nullopt;
  return pta_signature_set(k, g, *res.factors);
}

QuotientBlock block_from_quotient_pta(const FiniteGroup& k, const ElemAbelianEmbedding& e, const CharacterIndex& u,
                                      const ElementSet& kernel, const RingElement& a) {
  require(e.parent == k && a.group() == k, Errc::group_mismatch, "block, subgroup and carrier must share a group");
  for (Element b : e.basis) require(is_central(k, b), Errc::precondition, "E must be central in K");
  require(is_subgroup(k, kernel), Errc::not_closed, "kernel is not a subgroup");
  const RingElement chi = character_element(e, u);
  for (Element h : kernel) {
    require(contains(e.elements, h), Errc::precondition, "kernel must lie inside E");
    require(chi[h] == 1, Errc::precondition, "kernel is not inside Ker(chi_" + u.to_string() + ")");
  }
  require(is_ternary(a), Errc::pta_failure, "A must be {+1,0,-1}-valued");
  Quotient q = quotient(k, kernel);
  RingElement pa = pushforward(a, q.projection);
  RingElement auto_corr = multiply(pa, involution(pa));
  Coeff m2 = auto_corr[0];
  int j = 0;
  while ((Coeff{1} << (2 * j)) < m2) ++j;
  require(m2 >= 1 && (Coeff{1} << (2 * j)) == m2 && is_pta(pa, Coeff{1} << j), Errc::pta_failure,
          "image of A in K/H is not a perfect ternary array of modulus 2^j");
  RingElement lhs = multiply(multiply(a, chi), involution(a));
  require(lhs == scalar_mul(m2, chi), Errc::verification, "A chi A^(-1) != 2^(2j) chi");
  QuotientBlock out{a, j, false};
  out.is_signature_block =
      k.order() / e.elements.size() == static_cast<std::size_t>(m2) && is_signature_block(k, e, u, a);
  return out;
}

MappedBlock map_block(const GroupMap& sigma, const ElemAbelianEmbedding& e, const CharacterIndex& u,
                      const RingElement& a) {
  require(sigma.source == e.parent && sigma.target == e.parent && sigma.is_bijective(), Errc::invalid_argument,
          "sigma must be an automorphism of K");
  check_homomorphism(sigma);
  std::vector<Element> img;
  for (Element h : e.elements) img.push_back(sigma(h));
  require(make_set(std::move(img)) == e.elements, Errc::precondition, "sigma does not fix E");
  auto v = find_character(e, apply_map(character_element(e, u), sigma));
  require(v.has_value(), Errc::internal, "image of a character is not a character");
  RingElement b = apply_map(a, sigma);
  require(is_signature_block(e.parent, e, *v, b), Errc::verification, "mapped block fails verification");
  return MappedBlock{*v, std::move(b)};
}

SignatureSet map_signature_set(const SignatureSet& s, const GroupMap& emb) {
  require(emb.source == s.carrier && emb.is_bijective(), Errc::invalid_argument,
          "signature sets transport along isomorphisms only");
  SignatureSet out{emb.target, map_embedding(s.subgroup, emb), {}};
  for (const auto& b : s.blocks) out.blocks.push_back(apply_map(b, emb));
  verify_signature_set(out);
  return out;
}

}  // namespace hforge
