#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hforge {

using Element = std::uint32_t;

/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Element>;

ElementSet make_set(std::vector<Element> elems);
bool contains(const ElementSet& s, Element g);

struct NamedGenerator {
  std::string name;
  Element element;
};

enum class AxiomCheck {
  standard,  // exhaustive associativity up to order 64, 10^6 sampled triples above
  full,      // exhaustive associativity at every order
};

/// A finite group stored as a full Cayley table. Index 0 is the identity.
///
/// Instances are immutable handles onto shared storage, so copying is cheap
/// and two copies compare equal exactly when they refer to the same table.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> labels = {},
              std::vector<NamedGenerator> generators = {}, AxiomCheck check = AxiomCheck::standard);

  std::size_t order() const noexcept { return impl_->order; }
  Element mul(Element a, Element b) const noexcept { return impl_->table[a * impl_->order + b]; }
  Element inv(Element a) const noexcept { return impl_->inverse[a]; }
  static constexpr Element identity() noexcept { return 0; }

  std::span<const Element> row(Element a) const noexcept {
    return {impl_->table.data() + a * impl_->order, impl_->order};
  }
  std::span<const Element> table() const noexcept { return impl_->table; }

  Element pow(Element g, long long k) const;
  std::size_t element_order(Element g) const noexcept { return impl_->orders[g]; }

  const std::string& label(Element g) const { return impl_->labels[g]; }
  std::optional<Element> find_label(std::string_view label) const;
  const std::vector<NamedGenerator>& generators() const noexcept { return impl_->generators; }
  std::optional<Element> generator(std::string_view name) const;

  /// Invariant-factor orders when the table was built from an abelian
  /// exponent-tuple encoding (first coordinate varies fastest).
  const std::vector<std::size_t>& abelian_encoding() const noexcept { return impl_->abelian_orders; }
  FiniteGroup with_abelian_encoding(std::vector<std::size_t> orders) const;

  bool operator==(const FiniteGroup& other) const noexcept { return impl_ == other.impl_; }

 private:
  struct Impl {
    std::size_t order = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::size_t> orders;
    std::vector<std::string> labels;
    std::vector<NamedGenerator> generators;
    std::vector<std::size_t> abelian_orders;
  };
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Validates Latin-square, identity and associativity conditions on a raw
/// table; throws Error(group_axiom) naming the offending row or triple.
void check_group_table(std::size_t order, std::span<const Element> table, AxiomCheck check);

}  // namespace hforge
