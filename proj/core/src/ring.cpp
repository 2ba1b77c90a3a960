#include "hforge/ring.hpp"

#include <charconv>
#include <sstream>

#include "hforge/error.hpp"

namespace hforge {

namespace {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "group ring coefficient overflow in addition");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "group ring coefficient overflow in product");
  return r;
}

void require_same_group(const RingElement& a, const RingElement& b) {
  require(a.group() == b.group(), Errc::group_mismatch, "ring elements live in different groups");
}

}  // namespace

RingElement::RingElement(FiniteGroup group) : group_(std::move(group)), coeffs_(group_.order(), 0) {}

RingElement::RingElement(FiniteGroup group, std::vector<Coeff> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  require(coeffs_.size() == group_.order(), Errc::invalid_argument, "coefficient vector length must equal group order");
}

RingElement RingElement::basis(const FiniteGroup& g, Element e, Coeff c) {
  require(e < g.order(), Errc::invalid_argument, "element index out of range");
  RingElement r(g);
  r.coeffs_[e] = c;
  return r;
}

RingElement RingElement::sum_of(const FiniteGroup& g, const ElementSet& s) {
  RingElement r(g);
  for (Element e : s) {
    require(e < g.order(), Errc::invalid_argument, "element index out of range");
    r.coeffs_[e] += 1;
  }
  return r;
}

RingElement RingElement::from_subset(const FiniteGroup& g, const ElementSet& s) {
  RingElement r(g, std::vector<Coeff>(g.order(), 1));
  for (Element e : s) {
    require(e < g.order(), Errc::invalid_argument, "element index out of range");
    r.coeffs_[e] = -1;
  }
  return r;
}

bool RingElement::is_zero() const {
  for (Coeff c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

Coeff RingElement::augmentation() const {
  Coeff s = 0;
  for (Coeff c : coeffs_) s = checked_add(s, c);
  return s;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], checked_mul(-1, o.coeffs_[i]));
  return *this;
}

bool RingElement::operator==(const RingElement& o) const { return group_ == o.group_ && coeffs_ == o.coeffs_; }

RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
RingElement operator-(const RingElement& a) { return negate(a); }
RingElement operator*(const RingElement& a, const RingElement& b) { return multiply(a, b); }
RingElement operator*(Coeff c, const RingElement& a) { return scalar_mul(c, a); }

RingElement add(const RingElement& a, const RingElement& b) { return a + b; }

RingElement negate(const RingElement& a) { return scalar_mul(-1, a); }

RingElement scalar_mul(Coeff c, const RingElement& a) {
  std::vector<Coeff> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_mul(c, a.coeffs()[i]);
  return RingElement(a.group(), std::move(out));
}

RingElement multiply(const RingElement& a, const RingElement& b) {
  require_same_group(a, b);
  const FiniteGroup& g = a.group();
  const std::size_t n = g.order();
  std::vector<Coeff> out(n, 0);
  std::vector<Element> nzb;
  for (Element k = 0; k < n; ++k) {
    if (b.coeffs()[k] != 0) nzb.push_back(k);
  }
  for (Element h = 0; h < n; ++h) {
    const Coeff ah = a.coeffs()[h];
    if (ah == 0) continue;
    auto row = g.row(h);
    for (Element k : nzb) {
      Coeff& slot = out[row[k]];
      slot = checked_add(slot, checked_mul(ah, b.coeffs()[k]));
    }
  }
  return RingElement(g, std::move(out));
}

RingElement involution(const RingElement& a) {
  const FiniteGroup& g = a.group();
  std::vector<Coeff> out(g.order());
  for (Element h = 0; h < g.order(); ++h) out[g.inv(h)] = a.coeffs()[h];
  return RingElement(g, std::move(out));
}

ElementSet support(const RingElement& a) {
  ElementSet s;
  for (Element h = 0; h < a.coeffs().size(); ++h) {
    if (a.coeffs()[h] != 0) s.push_back(h);
  }
  return s;
}

ElementSet minus_one_positions(const RingElement& a) {
  ElementSet s;
  for (Element h = 0; h < a.coeffs().size(); ++h) {
    if (a.coeffs()[h] == -1) s.push_back(h);
  }
  return s;
}

bool is_pm1_on(const RingElement& a, const ElementSet& s) {
  std::vector<char> in(a.coeffs().size(), 0);
  for (Element e : s) {
    if (e >= in.size()) return false;
    in[e] = 1;
  }
  for (Element h = 0; h < in.size(); ++h) {
    Coeff c = a.coeffs()[h];
    if (in[h] ? (c != 1 && c != -1) : c != 0) return false;
  }
  return true;
}

bool is_ternary(const RingElement& a) {
  for (Coeff c : a.coeffs()) {
    if (c < -1 || c > 1) return false;
  }
  return true;
}

RingElement apply_map(const RingElement& a, const GroupMap& map) {
  require(map.source == a.group(), Errc::group_mismatch, "map source is not the element's group");
  std::vector<Coeff> c(map.target.order(), 0);
  for (Element h = 0; h < a.coeffs().size(); ++h) {
    if (a.coeffs()[h] != 0) c[map.images[h]] = checked_add(c[map.images[h]], a.coeffs()[h]);
  }
  return RingElement(map.target, std::move(c));
}

RingElement pushforward(const RingElement& a, const GroupMap& proj) { return apply_map(a, proj); }

bool is_scalar(const RingElement& a, Coeff c) {
  if (a.coeffs().empty() || a.coeffs()[0] != c) return false;
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] != 0) return false;
  }
  return true;
}

std::string to_text(const RingElement& a) {
  std::ostringstream os;
  for (Element h = 0; h < a.coeffs().size(); ++h) {
    if (a.coeffs()[h] != 0) os << a.group().label(h) << ' ' << a.coeffs()[h] << '\n';
  }
  return os.str();
}

RingElement ring_element_from_text(const FiniteGroup& g, const std::string& text) {
  RingElement out(g);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    Coeff c = 0;
    if (!(ls >> c)) fail(Errc::parse, "line " + std::to_string(lineno) + ": expected '<element> <coefficient>'");
    std::optional<Element> e = g.find_label(key);
    if (!e) {
      unsigned long idx = 0;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), idx);
      if (ec != std::errc{} || ptr != key.data() + key.size() || idx >= g.order()) {
        fail(Errc::parse, "line " + std::to_string(lineno) + ": unknown element '" + key + "'");
      }
      e = static_cast<Element>(idx);
    }
    out.set(*e, checked_add(out[*e], c));
  }
  return out;
}

std::string to_expression(const RingElement& a) {
  std::string s;
  for (Element h = 0; h < a.coeffs().size(); ++h) {
    Coeff c = a.coeffs()[h];
    if (c == 0) continue;
    const std::string& lab = a.group().label(h);
    if (c < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    Coeff m = c < 0 ? -c : c;
    if (h == 0) {
      s += std::to_string(m);
    } else {
      if (m != 1) s += std::to_string(m);
      s += lab;
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace hforge
