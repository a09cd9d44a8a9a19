#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tom/catalog.hpp"
#include "tom/compare.hpp"
#include "tom/marks.hpp"

namespace tom {

// ---------------------------------------------------------------------------
// Computing tables, with an optional on-disk cache.

struct ComputeOptions {
  unsigned threads = 1;
  std::optional<std::filesystem::path> cache_dir;
};

std::filesystem::path cache_path(const std::filesystem::path& dir, std::size_t order,
                                 std::size_t catalog_id);

// Loads the cached table if present and well formed, otherwise computes it
// and (when a cache directory is set) stores it.
MarksMatrix compute_marks(const GroupRecord& record, const ComputeOptions& options);

// One table per record, in record order; records are spread over the
// configured workers.
std::vector<MarksMatrix> compute_all(const std::vector<GroupRecord>& records,
                                     const ComputeOptions& options);

// ---------------------------------------------------------------------------
// Line-type comparison tables.

struct ComparisonRow {
  std::vector<std::size_t> value_counts;  // aligned with ComparisonTable::values
  std::size_t count_in_a = 0;
  std::size_t count_in_b = 0;
  bool differs = false;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

struct ComparisonTable {
  std::vector<Mark> values;  // nonzero values present in either table, ascending
  std::vector<ComparisonRow> rows;
  std::string line_kind = "Lines";  // heading word, e.g. "Columns"
  std::string name_a = "A";
  std::string name_b = "B";

  std::size_t discrepancies() const;
};

// One row per distinct line type (a row or a column of the marks matrix,
// described by how often each nonzero value occurs in it) present in either
// table. Rows are sorted by total nonzero count descending, then by value
// counts.
ComparisonTable comparison_table(const MarksMatrix& a, const MarksMatrix& b, Axis axis);

std::string to_latex(const ComparisonTable& t);
std::string to_tsv(const ComparisonTable& t);

// ---------------------------------------------------------------------------
// Orientation calibration against the reference G15/G16 column-type table.

struct Calibration {
  bool calibrated = false;
  Orientation orientation;
  std::string note;
};

// The reference table for SmallGroup(64,15) vs SmallGroup(64,16) as
// (#1, #2, #4, #8, #16, #32, #64, count in 15, count in 16) lines.
const std::vector<std::vector<std::size_t>>& reference_g15_g16_columns();

// Compares the line types of both matrix axes against the reference and
// picks the axis that reproduces it.
Calibration calibrate_orientation(const MarksMatrix& tom15, const MarksMatrix& tom16);

// Calibrates from the order-64 catalog at `catalog`, if it can be found.
Calibration calibrate_from_catalog(const std::filesystem::path& catalog,
                                   const ComputeOptions& options);

std::string calibration_header(const Calibration& c);

// ---------------------------------------------------------------------------
// Entry-multiset table and scan.

struct EntryTable {
  struct Line {
    std::size_t catalog_id = 0;
    std::size_t classes = 0;
    std::vector<std::size_t> counts;  // aligned with values
  };
  std::size_t order = 0;
  std::vector<Mark> values;  // every value occurring in any table, ascending
  std::vector<Line> lines;
};

EntryTable entry_table(const std::vector<GroupRecord>& records,
                       const std::vector<MarksMatrix>& tables);
std::string to_latex(const EntryTable& t);
std::string to_tsv(const EntryTable& t);

// Catalog id pairs with equal entry multisets.
std::vector<std::pair<std::size_t, std::size_t>> entry_equal_id_pairs(
    const std::vector<GroupRecord>& records, const std::vector<MarksMatrix>& tables);

// ---------------------------------------------------------------------------
// Pairwise verification.

struct PairOutcome {
  std::size_t id_a = 0;
  std::size_t id_b = 0;
  // "entries", "columns", "rows", "exact" (decider refuted), or "none"
  // (decider found an isomorphism).
  std::string separator;
};

struct VerifyResult {
  std::size_t order = 0;
  std::size_t groups = 0;
  std::vector<PairOutcome> pairs;  // (id_a, id_b) ascending
  std::map<std::string, std::size_t> separator_counts;
  std::size_t decider_runs = 0;
  bool pass = true;

  std::vector<PairOutcome> failures() const;
};

VerifyResult verify_catalog(const std::vector<GroupRecord>& records,
                            const std::vector<MarksMatrix>& tables,
                            const Orientation& orientation, unsigned threads = 1,
                            bool force_exact = false);

std::string verify_summary(const VerifyResult& r, const Calibration& c);
std::string verify_pairs_tsv(const VerifyResult& r);

}  // namespace tom
