#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tom/marks.hpp"
#include "tom/multiset.hpp"

namespace tom {

// Axis of the marks matrix (rows: acting subgroup U_i fixed; columns:
// coset space G/U_j fixed).
enum class Axis { Rows, Columns };

const char* axis_name(Axis a);
Axis other_axis(Axis a);
LineMultiset lines_invariant(const SquareMatrix& m, Axis axis);

struct Fingerprint {
  EntryMultiset entries;
  LineMultiset rows;
  LineMultiset columns;
  EntryMultiset class_orders;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const MarksMatrix& m);

struct IsoVerdict {
  bool isomorphic = false;
  // π with a(i, j) = b(π[i], π[j]); present iff isomorphic.
  std::optional<std::vector<std::size_t>> witness;
  // Fingerprint component that differed ("dimension", "entries", "rows",
  // "columns", "class_orders"); present iff refuted without search.
  std::optional<std::string> certificate;
  std::size_t search_nodes = 0;
};

// Exact decision whether some π satisfies a(i, j) = b(π(i), π(j)) for all
// i, j. Fingerprints refute early; otherwise individualization-refinement
// backtracking finds a witness, which is verified before returning.
IsoVerdict is_isomorphic(const MarksMatrix& a, const MarksMatrix& b);
IsoVerdict is_isomorphic(const SquareMatrix& a, const SquareMatrix& b);

bool verify_witness(const SquareMatrix& a, const SquareMatrix& b,
                    const std::vector<std::size_t>& pi);

// B(π(i), π(j)) = A(i, j).
SquareMatrix conjugate(const SquareMatrix& a, const std::vector<std::size_t>& pi);
MarksMatrix conjugate(const MarksMatrix& a, const std::vector<std::size_t>& pi);

// All index pairs (i < j) whose tables have equal entry multisets, sorted.
std::vector<std::pair<std::size_t, std::size_t>> find_equal_entry_pairs(
    const std::vector<MarksMatrix>& tables);
std::vector<std::pair<std::size_t, std::size_t>> find_equal_entry_pairs(
    const std::vector<EntryMultiset>& entries);

// Which matrix axis carries the published "column" tables. Determined by
// calibrate_orientation() in report.hpp.
struct Orientation {
  Axis published_columns = Axis::Columns;
  Axis published_rows() const { return other_axis(published_columns); }
};

struct InvariantCheck {
  std::string name;  // "entries", "columns", "rows" or "exact"
  bool equal = false;
};

// Escalates entries → columns → rows → exact decider (column and row named
// in the published convention given by `orientation`) and stops at the
// first invariant that differs. With force_exact the decider always runs.
std::vector<InvariantCheck> distinguish_report(const MarksMatrix& a, const MarksMatrix& b,
                                               const Orientation& orientation,
                                               bool force_exact = false);

// Same escalation on precomputed fingerprints. Returns nullopt when all
// three invariants agree and the decider is needed.
std::optional<std::string> first_separator(const Fingerprint& a, const Fingerprint& b,
                                           const Orientation& orientation);

}  // namespace tom
