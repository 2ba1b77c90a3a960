#include "hforge/exponent_poly.hpp"

#include "hforge/error.hpp"

namespace hforge {

namespace {

Coeff add_checked(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "polynomial coefficient overflow");
  return r;
}

Coeff mul_checked(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "polynomial coefficient overflow");
  return r;
}

void require_same(const ExponentPoly& a, const ExponentPoly& b) {
  require(a.group() == b.group(), Errc::group_mismatch, "polynomials live on different abelian groups");
}

}  // namespace

ExponentPoly ExponentPoly::constant(const AbelianGroup& g, Coeff c) {
  return monomial(g, Exponents(g.rank(), 0), c);
}

ExponentPoly ExponentPoly::monomial(const AbelianGroup& g, const Exponents& e, Coeff c) {
  ExponentPoly p(g);
  p.add_term(e, c);
  return p;
}

ExponentPoly ExponentPoly::generator_power(const AbelianGroup& g, std::size_t i, long long power, Coeff c) {
  require(i < g.rank(), Errc::invalid_argument, "generator position out of range");
  Exponents e(g.rank(), 0);
  e[i] = power;
  return monomial(g, e, c);
}

Coeff ExponentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(group_.reduce(e));
  return it == terms_.end() ? 0 : it->second;
}

void ExponentPoly::add_term(const Exponents& e, Coeff c) {
  require(e.size() == group_.rank(), Errc::invalid_argument, "exponent tuple has wrong length");
  if (c == 0) return;
  Exponents key = group_.reduce(e);
  auto [it, inserted] = terms_.try_emplace(std::move(key), 0);
  it->second = add_checked(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

ExponentPoly& ExponentPoly::operator+=(const ExponentPoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ExponentPoly& ExponentPoly::operator-=(const ExponentPoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, mul_checked(-1, c));
  return *this;
}

ExponentPoly operator+(ExponentPoly a, const ExponentPoly& b) { return a += b; }
ExponentPoly operator-(ExponentPoly a, const ExponentPoly& b) { return a -= b; }
ExponentPoly operator-(const ExponentPoly& a) { return -1 * a; }

ExponentPoly operator*(const ExponentPoly& a, const ExponentPoly& b) {
  require_same(a, b);
  ExponentPoly out(a.group());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, mul_checked(ca, cb));
    }
  }
  return out;
}

ExponentPoly operator*(Coeff c, const ExponentPoly& a) {
  ExponentPoly out(a.group());
  for (const auto& [e, v] : a.terms()) out.add_term(e, mul_checked(c, v));
  return out;
}

ExponentPoly substitute(const ExponentPoly& p, const std::vector<Exponents>& generator_images,
                        const AbelianGroup& target) {
  require(generator_images.size() == p.group().rank(), Errc::invalid_argument,
          "substitution needs one image per source generator");
  for (const auto& img : generator_images) {
    require(img.size() == target.rank(), Errc::invalid_argument, "substitution image has wrong length");
  }
  ExponentPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents t(target.rank(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) t[j] += e[i] * generator_images[i][j];
    }
    out.add_term(t, c);
  }
  return out;
}

RingElement to_ring_element(const ExponentPoly& p, const FiniteGroup& carrier) {
  require(carrier.order() == p.group().order() && carrier.abelian_encoding() == p.group().orders(),
          Errc::group_mismatch, "carrier is not the polynomial's abelian group");
  RingElement out(carrier);
  for (const auto& [e, c] : p.terms()) out.set(p.group().index(e), c);
  return out;
}

ExponentPoly from_ring_element(const RingElement& a, const AbelianGroup& group) {
  require(a.group().abelian_encoding() == group.orders(), Errc::group_mismatch,
          "ring element does not live on this abelian group");
  ExponentPoly p(group);
  for (Element h = 0; h < a.coeffs().size(); ++h) p.add_term(group.exponents(h), a[h]);
  return p;
}

RingElement embed(const ExponentPoly& p, const GroupMap& emb) {
  require(emb.is_injective(), Errc::invalid_argument, "embedding is not injective");
  return apply_map(to_ring_element(p, emb.source), emb);
}

std::string to_string(const ExponentPoly& p) {
  const auto names = generator_names(p.group().rank());
  // element-index order: first generator varies fastest
  std::map<Element, std::pair<Exponents, Coeff>> ordered;
  for (const auto& [e, c] : p.terms()) ordered.emplace(p.group().index(e), std::make_pair(e, c));
  std::string s;
  for (const auto& [idx, term] : ordered) {
    const auto& [e, c] = term;
    std::string word;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      word += names[i];
      if (e[i] != 1) word += "^" + std::to_string(e[i]);
    }
    if (c < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    Coeff m = c < 0 ? -c : c;
    if (word.empty()) {
      s += std::to_string(m);
    } else {
      if (m != 1) s += std::to_string(m);
      s += word;
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace hforge
