#include "hforge/expr.hpp"

#include <cctype>
#include <vector>

#include "hforge/builders.hpp"
#include "hforge/error.hpp"

namespace hforge {

namespace {

class RingParser {
 public:
  RingParser(const FiniteGroup& g, const std::string& s) : g_(g), s_(s) {}

  RingElement parse() {
    RingElement r = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  const FiniteGroup& g_;
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::parse, "ring expression at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == '*' || std::isalnum(static_cast<unsigned char>(c));
  }

  long long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    if (pos_ - start > 17) error("integer too large");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  RingElement expr() {
    skip();
    bool neg = false;
    if (peek('+') || peek('-')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    RingElement acc = term();
    if (neg) acc = negate(acc);
    while (peek('+') || peek('-')) {
      bool minus = s_[pos_] == '-';
      ++pos_;
      RingElement t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  RingElement term() {
    RingElement acc = factor();
    while (starts_factor()) {
      if (peek('*')) ++pos_;
      acc = multiply(acc, factor());
    }
    return acc;
  }

  RingElement factor() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    std::optional<Element> single;
    RingElement base(g_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = RingElement::basis(g_, 0, integer());
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      single = generator();
      base = RingElement::basis(g_, *single);
    } else {
      error("unexpected '" + std::string(1, c) + "'");
    }
    if (!peek('^')) return base;
    ++pos_;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    long long k = integer();
    if (single) return RingElement::basis(g_, g_.pow(*single, neg ? -k : k));
    if (neg) error("negative exponent on a non-monomial");
    if (k > 4096) error("exponent too large");
    RingElement r = RingElement::one(g_);
    for (long long i = 0; i < k; ++i) r = multiply(r, base);
    return r;
  }

  Element generator() {
    // longest generator name matching at this position
    std::size_t best = 0;
    Element elem = 0;
    for (const auto& gen : g_.generators()) {
      const std::string& n = gen.name;
      if (n.size() > best && s_.compare(pos_, n.size(), n) == 0) {
        best = n.size();
        elem = gen.element;
      }
    }
    if (best == 0) error("unknown generator");
    pos_ += best;
    return elem;
  }
};

std::size_t parse_size(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) fail(Errc::parse, "group expression: expected a number at offset " + std::to_string(start));
  if (pos - start > 9) fail(Errc::parse, "group expression: number too large");
  return std::stoul(s.substr(start, pos - start));
}

long long parse_signed(const std::string& s, std::size_t& pos) {
  bool neg = pos < s.size() && s[pos] == '-';
  if (neg) ++pos;
  long long v = static_cast<long long>(parse_size(s, pos));
  return neg ? -v : v;
}

FiniteGroup parse_group_factor(const std::string& s, std::size_t& pos) {
  auto word_at = [&](const std::string& w) { return s.compare(pos, w.size(), w) == 0; };
  auto args = [&](std::size_t count) {
    if (pos >= s.size() || s[pos] != '(') fail(Errc::parse, "group expression: expected '('");
    ++pos;
    std::vector<long long> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0) {
        if (pos >= s.size() || s[pos] != ',') fail(Errc::parse, "group expression: expected ','");
        ++pos;
      }
      out.push_back(parse_signed(s, pos));
    }
    if (pos >= s.size() || s[pos] != ')') fail(Errc::parse, "group expression: expected ')'");
    ++pos;
    return out;
  };
  if (word_at("semidirect")) {
    pos += 10;
    auto a = args(3);
    return semidirect_cyclic(static_cast<std::size_t>(a[0]), static_cast<std::size_t>(a[1]), a[2]);
  }
  if (word_at("metacyclic")) {
    pos += 10;
    auto a = args(4);
    return metacyclic(static_cast<std::size_t>(a[0]), static_cast<std::size_t>(a[1]), a[2], a[3]);
  }
  if (word_at("SD")) {
    pos += 2;
    return semidihedral(parse_size(s, pos));
  }
  if (pos >= s.size()) fail(Errc::parse, "group expression: unexpected end");
  char c = s[pos++];
  switch (c) {
    case 'C': return cyclic(parse_size(s, pos));
    case 'E': return elementary_abelian(parse_size(s, pos));
    case 'D': return dihedral(parse_size(s, pos));
    case 'Q': return generalized_quaternion(parse_size(s, pos));
    case 'M': return modular(parse_size(s, pos));
    default: break;
  }
  fail(Errc::parse, "group expression: unknown factor starting with '" + std::string(1, c) + "'");
}

}  // namespace

RingElement parse_ring_expression(const FiniteGroup& g, const std::string& text) {
  return RingParser(g, text).parse();
}

Element parse_element(const FiniteGroup& g, const std::string& text) {
  if (text == "1") return 0;
  RingElement r = parse_ring_expression(g, text);
  auto s = support(r);
  require(s.size() == 1 && r[s.front()] == 1, Errc::parse, "'" + text + "' is not a group element");
  return s.front();
}

FiniteGroup parse_group_expression(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  require(!s.empty(), Errc::parse, "empty group expression");
  std::size_t pos = 0;
  FiniteGroup g = parse_group_factor(s, pos);
  while (pos < s.size()) {
    if (s[pos] != 'x' && s[pos] != '*') fail(Errc::parse, "group expression: expected 'x' between factors");
    ++pos;
    g = direct_product(g, parse_group_factor(s, pos));
  }
  return g;
}

}  // namespace hforge
