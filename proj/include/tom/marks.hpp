#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tom/group.hpp"
#include "tom/matrix.hpp"
#include "tom/subgroups.hpp"

namespace tom {

// Table of marks: entries(i, j) = |Fix_{U_i}(G/U_j)|, where U_0..U_{n-1}
// are class representatives in ascending order. Row index = acting
// subgroup, column index = coset space.
struct MarksMatrix {
  SquareMatrix entries;
  std::vector<std::size_t> class_orders;  // non-decreasing
  std::size_t group_order = 0;
  std::optional<std::size_t> catalog_id;

  std::size_t size() const { return entries.size(); }

  friend bool operator==(const MarksMatrix&, const MarksMatrix&) = default;
};

// Number of cosets xV with u·xV = xV for all u ∈ U, by scanning one
// representative x per left coset and testing x⁻¹Ux ⊆ V.
// Throws InputError if U or V is not a subgroup of g.
Mark fixed_points_by_cosets(const FiniteGroup& g, const ElementSet& u, const ElementSet& v);

// Same count as (#conjugates of U inside V) · |N_G(U)| / |V|.
Mark fixed_points_by_conjugates(const FiniteGroup& g, const ElementSet& u,
                                const ElementSet& v);

inline Mark fixed_points_count(const FiniteGroup& g, const ElementSet& u,
                               const ElementSet& v) {
  return fixed_points_by_conjugates(g, u, v);
}

// The table of marks from a class list as produced by
// conjugacy_classes_of_subgroups(). Rows are distributed over `threads`
// workers; the result does not depend on the worker count.
MarksMatrix table_of_marks(const FiniteGroup& g, const std::vector<SubgroupClass>& classes,
                           unsigned threads = 1);

MarksMatrix table_of_marks(const FiniteGroup& g, unsigned threads = 1);

// Checks the structural invariants of a table of marks (zero below-order
// entries, trivial row, full-group column, positive diagonal).
bool satisfies_marks_invariants(const MarksMatrix& m);

}  // namespace tom
