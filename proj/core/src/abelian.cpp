#include "hforge/abelian.hpp"

#include <algorithm>

#include "hforge/error.hpp"

namespace hforge {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
  require(is_power_of_two(n), Errc::invalid_argument, std::to_string(n) + " is not a power of two");
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

AbelianGroup::AbelianGroup(std::vector<std::size_t> orders) : orders_(std::move(orders)) {
  for (std::size_t o : orders_) {
    require(o >= 1, Errc::invalid_argument, "cyclic factor order must be positive");
    order_ *= o;
  }
}

Element AbelianGroup::index(const Exponents& e) const {
  require(e.size() == orders_.size(), Errc::invalid_argument, "exponent tuple has wrong length");
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    long long o = static_cast<long long>(orders_[i]);
    long long v = ((e[i] % o) + o) % o;
    idx += static_cast<std::size_t>(v) * stride;
    stride *= orders_[i];
  }
  return static_cast<Element>(idx);
}

Exponents AbelianGroup::exponents(Element index) const {
  Exponents e(orders_.size());
  std::size_t rest = index;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    e[i] = static_cast<long long>(rest % orders_[i]);
    rest /= orders_[i];
  }
  return e;
}

Exponents AbelianGroup::reduce(Exponents e) const {
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    long long o = static_cast<long long>(orders_[i]);
    e[i] = ((e[i] % o) + o) % o;
  }
  return e;
}

bool AbelianGroup::is_canonical_2group() const {
  for (std::size_t o : orders_) {
    if (!is_power_of_two(o) || o < 2) return false;
  }
  return std::is_sorted(orders_.begin(), orders_.end(), std::greater<>());
}

std::vector<std::string> generator_names(std::size_t rank) {
  static const char* small[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) {
    names.push_back(rank <= 3 ? std::string(small[i]) : "x" + std::to_string(i + 1));
  }
  return names;
}

FiniteGroup abelian_group(const AbelianGroup& group) {
  const std::size_t n = group.order();
  const auto names = generator_names(group.rank());
  std::vector<Element> table(n * n);
  std::vector<Exponents> exps(n);
  for (Element g = 0; g < n; ++g) exps[g] = group.exponents(g);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Exponents s(group.rank());
      for (std::size_t i = 0; i < group.rank(); ++i) s[i] = exps[a][i] + exps[b][i];
      table[a * n + b] = group.index(s);
    }
  }
  std::vector<std::string> labels(n);
  for (Element g = 0; g < n; ++g) {
    std::string w;
    for (std::size_t i = 0; i < group.rank(); ++i) {
      if (exps[g][i] == 0) continue;
      w += names[i];
      if (exps[g][i] != 1) w += "^" + std::to_string(exps[g][i]);
    }
    labels[g] = w.empty() ? "1" : w;
  }
  std::vector<NamedGenerator> gens;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    Exponents e(group.rank(), 0);
    e[i] = 1;
    gens.push_back({names[i], group.index(e)});
  }
  FiniteGroup g(n, std::move(table), std::move(labels), std::move(gens));
  return g.with_abelian_encoding(group.orders());
}

}  // namespace hforge
