#include "hforge/finite_group.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hforge/error.hpp"

namespace hforge {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::group_axiom: return "group-axiom";
    case Errc::not_closed: return "not-closed";
    case Errc::not_normal: return "not-normal";
    case Errc::not_abelian: return "not-abelian";
    case Errc::group_mismatch: return "group-mismatch";
    case Errc::overflow: return "overflow";
    case Errc::parse: return "parse";
    case Errc::precondition: return "precondition";
    case Errc::pta_failure: return "pta-failure";
    case Errc::support_failure: return "support-failure";
    case Errc::verification: return "verification";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

ElementSet make_set(std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

bool contains(const ElementSet& s, Element g) { return std::binary_search(s.begin(), s.end(), g); }

void check_group_table(std::size_t n, std::span<const Element> table, AxiomCheck check) {
  require(n >= 1, Errc::group_axiom, "group order must be positive");
  require(table.size() == n * n, Errc::group_axiom, "table size is not order^2");
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      Element v = table[a * n + b];
      if (v >= n || seen[v]) {
        fail(Errc::group_axiom, "row " + std::to_string(a) + " is not a permutation");
      }
      seen[v] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      Element v = table[a * n + b];
      if (seen[v]) fail(Errc::group_axiom, "column " + std::to_string(b) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g] != g || table[g * n] != g) {
      fail(Errc::group_axiom, "index 0 is not the identity (element " + std::to_string(g) + ")");
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(table[a * n + b]); };
  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c))) {
      std::ostringstream os;
      os << "associativity fails on triple (" << a << "," << b << "," << c << ")";
      fail(Errc::group_axiom, os.str());
    }
  };
  if (check == AxiomCheck::full || n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed'2020ULL ^ n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 1'000'000; ++i) check_triple(pick(rng), pick(rng), pick(rng));
  }
}

namespace {

std::vector<NamedGenerator> greedy_generators(std::size_t n, std::span<const Element> table) {
  std::vector<char> in(n, 0);
  std::vector<Element> members{0};
  in[0] = 1;
  std::vector<NamedGenerator> gens;
  for (Element g = 1; g < n; ++g) {
    if (in[g]) continue;
    gens.push_back({"g" + std::to_string(gens.size() + 1), g});
    // close the subgroup under right multiplication by all generators
    std::vector<Element> frontier = members;
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (Element h : frontier) {
        for (const auto& gen : gens) {
          Element p = table[h * n + gen.element];
          if (!in[p]) {
            in[p] = 1;
            members.push_back(p);
            next.push_back(p);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> labels,
                         std::vector<NamedGenerator> generators, AxiomCheck check) {
  check_group_table(order, table, check);
  auto impl = std::make_shared<Impl>();
  impl->order = order;
  impl->table = std::move(table);
  impl->inverse.assign(order, 0);
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      if (impl->table[a * order + b] == 0) {
        impl->inverse[a] = b;
        break;
      }
    }
  }
  impl->orders.assign(order, 1);
  for (Element a = 1; a < order; ++a) {
    std::size_t k = 1;
    Element p = a;
    while (p != 0) {
      p = impl->table[p * order + a];
      ++k;
    }
    impl->orders[a] = k;
  }
  if (labels.empty()) {
    labels.reserve(order);
    labels.push_back("1");
    for (std::size_t g = 1; g < order; ++g) labels.push_back("e" + std::to_string(g));
  }
  require(labels.size() == order, Errc::invalid_argument, "label count does not match group order");
  impl->labels = std::move(labels);
  for (const auto& gen : generators) {
    require(gen.element < order, Errc::invalid_argument, "generator index out of range");
  }
  impl->generators = generators.empty() ? greedy_generators(order, impl->table) : std::move(generators);
  {
    // named generators must generate; normality tests rely on it
    std::vector<char> in(order, 0);
    in[0] = 1;
    std::vector<Element> frontier{0};
    std::size_t reached = 1;
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (Element h : frontier) {
        for (const auto& gen : impl->generators) {
          Element p = impl->table[h * order + gen.element];
          if (!in[p]) {
            in[p] = 1;
            ++reached;
            next.push_back(p);
          }
        }
      }
      frontier = std::move(next);
    }
    require(reached == order, Errc::invalid_argument, "named generators do not generate the group");
  }
  impl_ = std::move(impl);
}

FiniteGroup FiniteGroup::with_abelian_encoding(std::vector<std::size_t> orders) const {
  auto copy = std::make_shared<Impl>(*impl_);
  copy->abelian_orders = std::move(orders);
  return FiniteGroup(std::shared_ptr<const Impl>(std::move(copy)));
}

Element FiniteGroup::pow(Element g, long long k) const {
  std::size_t ord = element_order(g);
  long long e = k % static_cast<long long>(ord);
  if (e < 0) e += static_cast<long long>(ord);
  Element acc = identity();
  for (long long i = 0; i < e; ++i) acc = mul(acc, g);
  return acc;
}

std::optional<Element> FiniteGroup::find_label(std::string_view label) const {
  for (Element g = 0; g < order(); ++g) {
    if (impl_->labels[g] == label) return g;
  }
  return std::nullopt;
}

std::optional<Element> FiniteGroup::generator(std::string_view name) const {
  for (const auto& gen : impl_->generators) {
    if (gen.name == name) return gen.element;
  }
  return std::nullopt;
}

}  // namespace hforge
