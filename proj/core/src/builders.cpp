#include "hforge/builders.hpp"

#include <algorithm>

#include "hforge/abelian.hpp"
#include "hforge/error.hpp"

namespace hforge {

namespace {

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

long long pow_mod(long long base, std::size_t e, long long m) {
  long long r = 1 % m;
  base = mod(base, m);
  for (std::size_t i = 0; i < e; ++i) r = (r * base) % m;
  return r;
}

std::string power_word(const std::string& name, long long e) {
  if (e == 0) return "";
  if (e == 1) return name;
  return name + "^" + std::to_string(e);
}

std::string concat_word(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + b;
}

}  // namespace

FiniteGroup cyclic(std::size_t n, const std::string& generator) {
  require(n >= 1, Errc::invalid_argument, "cyclic group order must be positive");
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
    labels[i] = i == 0 ? "1" : power_word(generator, static_cast<long long>(i));
  }
  std::vector<NamedGenerator> gens;
  if (n > 1) gens.push_back({generator, 1});
  FiniteGroup g(n, std::move(table), std::move(labels), std::move(gens));
  return g.with_abelian_encoding({n});
}

FiniteGroup elementary_abelian(std::size_t rank) {
  return abelian_group(AbelianGroup(std::vector<std::size_t>(rank, 2)));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  const std::size_t n = ng * nh;
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element first = g.mul(a % ng, b % ng);
      Element second = h.mul(a / ng, b / ng);
      table[a * n + b] = static_cast<Element>(first + ng * second);
    }
  }
  bool clash = false;
  for (const auto& a : g.generators()) {
    for (const auto& b : h.generators()) clash = clash || a.name == b.name;
  }
  std::vector<NamedGenerator> gens;
  for (const auto& a : g.generators()) gens.push_back({a.name, a.element});
  for (const auto& b : h.generators()) {
    gens.push_back({clash ? b.name + "_2" : b.name, static_cast<Element>(ng * b.element)});
  }
  std::vector<std::string> labels(n);
  for (Element a = 0; a < n; ++a) {
    const std::string& lg = g.label(a % ng);
    const std::string& lh = h.label(a / ng);
    labels[a] = clash ? "(" + lg + "," + lh + ")" : concat_word(lg, lh);
  }
  FiniteGroup out(n, std::move(table), std::move(labels), std::move(gens));
  const auto& ea = g.abelian_encoding();
  const auto& eb = h.abelian_encoding();
  if (!ea.empty() && !eb.empty()) {
    std::vector<std::size_t> orders = ea;
    orders.insert(orders.end(), eb.begin(), eb.end());
    out = out.with_abelian_encoding(std::move(orders));
  }
  return out;
}

FiniteGroup metacyclic(std::size_t m, std::size_t n, long long k, long long t) {
  require(m >= 1 && n >= 1, Errc::invalid_argument, "metacyclic parameters must be positive");
  const long long mm = static_cast<long long>(m);
  require(pow_mod(k, n, mm) == 1 % mm, Errc::invalid_argument,
          "k^n must be 1 mod m (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
  require(mod(t * k - t, mm) == 0, Errc::invalid_argument, "y^n = x^t must commute with y");
  const std::size_t order = m * n;
  std::vector<long long> kpow(n);
  for (std::size_t j = 0; j < n; ++j) kpow[j] = pow_mod(k, j, mm);
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    std::size_t i = a % m, j = a / m;
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t ia = b % m, jb = b / m;
      long long xe = static_cast<long long>(i) + static_cast<long long>(ia) * kpow[j];
      std::size_t ye = j + jb;
      if (ye >= n) {
        ye -= n;
        xe += t;
      }
      table[a * order + b] = static_cast<Element>(mod(xe, mm) + static_cast<long long>(m * ye));
    }
  }
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::string w = power_word("x", static_cast<long long>(a % m)) + power_word("y", static_cast<long long>(a / m));
    labels[a] = w.empty() ? "1" : w;
  }
  std::vector<NamedGenerator> gens;
  if (m > 1) gens.push_back({"x", 1});
  if (n > 1) gens.push_back({"y", static_cast<Element>(m)});
  return FiniteGroup(order, std::move(table), std::move(labels), std::move(gens));
}

FiniteGroup semidirect_cyclic(std::size_t m, std::size_t n, long long k) { return metacyclic(m, n, k, 0); }

FiniteGroup semidirect_product(const FiniteGroup& nrm, const FiniteGroup& h,
                               const std::vector<std::vector<Element>>& action) {
  const std::size_t nn = nrm.order();
  const std::size_t nh = h.order();
  require(action.size() == nh, Errc::invalid_argument, "action needs one automorphism per element of H");
  for (const auto& perm : action) {
    require(perm.size() == nn, Errc::invalid_argument, "action entry is not a permutation of N");
  }
  const std::size_t order = nn * nh;
  std::vector<Element> table(order * order);
  for (Element a = 0; a < order; ++a) {
    Element n1 = a % nn, h1 = a / nn;
    for (Element b = 0; b < order; ++b) {
      Element n2 = b % nn, h2 = b / nn;
      Element np = nrm.mul(n1, action[h1][n2]);
      table[a * order + b] = static_cast<Element>(np + nn * h.mul(h1, h2));
    }
  }
  std::vector<NamedGenerator> gens;
  for (const auto& g : nrm.generators()) gens.push_back(g);
  for (const auto& g : h.generators()) gens.push_back({g.name, static_cast<Element>(nn * g.element)});
  std::vector<std::string> labels(order);
  for (Element a = 0; a < order; ++a) labels[a] = concat_word(nrm.label(a % nn), h.label(a / nn));
  return FiniteGroup(order, std::move(table), std::move(labels), std::move(gens));
}

FiniteGroup dihedral(std::size_t order) {
  require(order >= 4 && order % 2 == 0, Errc::invalid_argument, "dihedral group order must be even and >= 4");
  const std::size_t m = order / 2;
  return metacyclic(m, 2, static_cast<long long>(m) - 1, 0);
}

FiniteGroup quaternion8() { return generalized_quaternion(8); }

FiniteGroup generalized_quaternion(std::size_t order) {
  require(order >= 8 && is_power_of_two(order), Errc::invalid_argument,
          "generalized quaternion order must be a power of two >= 8");
  const std::size_t m = order / 2;
  return metacyclic(m, 2, static_cast<long long>(m) - 1, static_cast<long long>(m / 2));
}

FiniteGroup semidihedral(std::size_t order) {
  require(order >= 16 && is_power_of_two(order), Errc::invalid_argument,
          "semidihedral order must be a power of two >= 16");
  const std::size_t m = order / 2;
  return metacyclic(m, 2, static_cast<long long>(m / 2) - 1, 0);
}

FiniteGroup modular(std::size_t order) {
  require(order >= 16 && is_power_of_two(order), Errc::invalid_argument,
          "modular group order must be a power of two >= 16");
  const std::size_t m = order / 2;
  return metacyclic(m, 2, static_cast<long long>(m / 2) + 1, 0);
}

}  // namespace hforge
