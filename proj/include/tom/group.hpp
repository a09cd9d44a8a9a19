#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tom/permutation.hpp"

namespace tom {

using Element = std::uint32_t;

// (order, catalog id) of a group taken from a small-group catalog.
struct GroupLabel {
  std::size_t order = 0;
  std::size_t catalog_id = 0;

  friend bool operator==(const GroupLabel&, const GroupLabel&) = default;
};

// A finite group materialized as a Cayley table. Element 0 is the identity.
// Immutable after construction and safe to share between threads.
class FiniteGroup {
 public:
  // Builds from a row-major order×order multiplication table. The table is
  // checked against the group axioms (associativity exhaustively for orders
  // up to 64, on a deterministic sample above that); throws InputError.
  static FiniteGroup from_cayley(std::size_t order, std::vector<Element> table,
                                 std::optional<GroupLabel> label = {});

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return cayley_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  // g·h·g⁻¹
  Element conj(Element g, Element h) const { return mul(mul(g, h), inverse_[g]); }

  std::span<const Element> cayley_row(Element a) const {
    return {cayley_.data() + a * order_, order_};
  }
  const std::optional<GroupLabel>& label() const { return label_; }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> cayley_;
  std::vector<Element> inverse_;
  std::optional<GroupLabel> label_;
};

// Materializes the group generated by `gens`. Element indices follow the
// close_generators() order, so the identity is element 0 and rebuilding
// from the same list gives the identical table.
FiniteGroup build_group(std::span<const Permutation> gens,
                        std::optional<GroupLabel> label = {},
                        std::size_t bound = kDefaultGroupBound);

// Checks every FiniteGroup invariant; returns false on the first violation.
bool satisfies_group_axioms(const FiniteGroup& g);

}  // namespace tom
