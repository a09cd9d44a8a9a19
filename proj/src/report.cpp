#include "tom/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tom/errors.hpp"
#include "tom/parallel.hpp"

namespace tom {

// ---------------------------------------------------------------------------

std::filesystem::path cache_path(const std::filesystem::path& dir, std::size_t order,
                                 std::size_t catalog_id) {
  return dir / ("tom_" + std::to_string(order) + "_" + std::to_string(catalog_id) + ".txt");
}

namespace {

std::optional<MarksMatrix> load_cached(const std::filesystem::path& path,
                                       const GroupRecord& record) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) return std::nullopt;
  try {
    MarksMatrix m = read_marks(read_text_file(path));
    if (m.group_order != record.order || m.catalog_id != record.catalog_id) return std::nullopt;
    if (!satisfies_marks_invariants(m)) return std::nullopt;
    return m;
  } catch (const InputError&) {
    return std::nullopt;
  }
}

MarksMatrix compute_one(const GroupRecord& record, const ComputeOptions& options,
                        unsigned inner_threads) {
  std::optional<std::filesystem::path> path;
  if (options.cache_dir) {
    path = cache_path(*options.cache_dir, record.order, record.catalog_id);
    if (auto cached = load_cached(*path, record)) return std::move(*cached);
  }
  const FiniteGroup g = build_group(record);
  MarksMatrix m = table_of_marks(g, inner_threads);
  if (path) write_text_file(*path, write_marks(m));
  return m;
}

}  // namespace

MarksMatrix compute_marks(const GroupRecord& record, const ComputeOptions& options) {
  return compute_one(record, options, options.threads);
}

std::vector<MarksMatrix> compute_all(const std::vector<GroupRecord>& records,
                                     const ComputeOptions& options) {
  std::vector<MarksMatrix> tables(records.size());
  parallel_for(records.size(), options.threads,
               [&](std::size_t i) { tables[i] = compute_one(records[i], options, 1); });
  return tables;
}

// ---------------------------------------------------------------------------

std::size_t ComparisonTable::discrepancies() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.differs; }));
}

ComparisonTable comparison_table(const MarksMatrix& a, const MarksMatrix& b, Axis axis) {
  const LineMultiset la = lines_invariant(a.entries, axis);
  const LineMultiset lb = lines_invariant(b.entries, axis);

  std::set<Mark> present;
  for (const auto* lines : {&la, &lb})
    for (const auto& [line, times] : *lines)
      for (const auto& [v, k] : line)
        if (v != 0) present.insert(v);

  ComparisonTable t;
  t.values.assign(present.begin(), present.end());
  t.line_kind = axis == Axis::Rows ? "Rows" : "Columns";

  // A line type is its vector of nonzero value counts.
  std::map<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>> counts;
  auto tally = [&](const LineMultiset& lines, bool first) {
    for (const auto& [line, times] : lines) {
      std::vector<std::size_t> key(t.values.size(), 0);
      for (const auto& [v, k] : line) {
        if (v == 0) continue;
        const auto pos = std::lower_bound(t.values.begin(), t.values.end(), v) - t.values.begin();
        key[static_cast<std::size_t>(pos)] = k;
      }
      auto& slot = counts[key];
      (first ? slot.first : slot.second) += times;
    }
  };
  tally(la, true);
  tally(lb, false);

  for (const auto& [key, ab] : counts)
    t.rows.push_back({key, ab.first, ab.second, ab.first != ab.second});

  auto total = [](const ComparisonRow& r) {
    std::size_t s = 0;
    for (auto c : r.value_counts) s += c;
    return s;
  };
  std::sort(t.rows.begin(), t.rows.end(), [&](const ComparisonRow& x, const ComparisonRow& y) {
    const auto tx = total(x), ty = total(y);
    if (tx != ty) return tx > ty;
    return x.value_counts < y.value_counts;
  });
  return t;
}

std::string to_latex(const ComparisonTable& t) {
  std::ostringstream out;
  out << "\\begin{longtable}{";
  for (std::size_t k = 0; k < t.values.size(); ++k) out << (k ? "|c" : "c");
  out << "||c|c}\n\t";
  for (std::size_t k = 0; k < t.values.size(); ++k) out << "\\#" << t.values[k] << " & ";
  out << t.line_kind << " in $" << t.name_a << "$ & " << t.line_kind << " in $" << t.name_b
      << "$\\\\\n";
  for (const auto& r : t.rows) {
    out << '\t';
    for (std::size_t k = 0; k < r.value_counts.size(); ++k) out << (k ? " &" : "") << r.value_counts[k];
    if (r.differs)
      out << " &\\underline{" << r.count_in_a << "} & \\underline{" << r.count_in_b << "}";
    else
      out << " &" << r.count_in_a << " &" << r.count_in_b;
    out << "\\\\\n";
  }
  out << "\\end{longtable}\n";
  return out.str();
}

std::string to_tsv(const ComparisonTable& t) {
  std::ostringstream out;
  for (auto v : t.values) out << '#' << v << '\t';
  out << t.line_kind << " in " << t.name_a << '\t' << t.line_kind << " in " << t.name_b
      << "\tdiffers\n";
  for (const auto& r : t.rows) {
    for (auto c : r.value_counts) out << c << '\t';
    out << r.count_in_a << '\t' << r.count_in_b << '\t' << (r.differs ? 1 : 0) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

const std::vector<std::vector<std::size_t>>& reference_g15_g16_columns() {
  // #1 #2 #4 #8 #16 #32 #64 | in (64,15) | in (64,16)
  static const std::vector<std::vector<std::size_t>> table{
      {1, 3, 5, 8, 6, 3, 1, 1, 1}, {1, 3, 5, 5, 3, 1, 0, 1, 1}, {1, 3, 5, 6, 3, 1, 0, 1, 1},
      {1, 3, 5, 3, 2, 1, 0, 1, 1}, {1, 3, 5, 3, 1, 0, 0, 1, 1}, {1, 3, 3, 3, 1, 0, 0, 1, 2},
      {1, 3, 3, 2, 1, 0, 0, 3, 1}, {1, 3, 1, 2, 0, 0, 0, 1, 1}, {1, 3, 3, 1, 0, 0, 0, 2, 2},
      {1, 3, 1, 1, 0, 0, 0, 1, 1}, {1, 3, 0, 0, 0, 0, 0, 2, 2}, {1, 1, 2, 0, 0, 0, 0, 1, 1},
      {1, 1, 1, 1, 0, 0, 0, 2, 2}, {1, 3, 1, 0, 0, 0, 0, 1, 1}, {1, 1, 1, 0, 0, 0, 0, 2, 2},
      {1, 2, 0, 0, 0, 0, 0, 2, 2}, {1, 1, 0, 0, 0, 0, 0, 3, 3}, {1, 0, 0, 0, 0, 0, 0, 1, 1},
      {1, 3, 3, 1, 1, 0, 0, 0, 1},
  };
  return table;
}

namespace {

bool reproduces_reference(const ComparisonTable& t) {
  const std::vector<Mark> expected_values{1, 2, 4, 8, 16, 32, 64};
  if (t.values != expected_values) return false;
  std::set<std::vector<std::size_t>> got;
  for (const auto& r : t.rows) {
    auto line = r.value_counts;
    line.push_back(r.count_in_a);
    line.push_back(r.count_in_b);
    got.insert(std::move(line));
  }
  const auto& ref = reference_g15_g16_columns();
  return got == std::set<std::vector<std::size_t>>(ref.begin(), ref.end());
}

Calibration uncalibrated(std::string reason) {
  Calibration c;
  c.note = std::move(reason);
  return c;
}

}  // namespace

Calibration calibrate_orientation(const MarksMatrix& tom15, const MarksMatrix& tom16) {
  const bool rows = reproduces_reference(comparison_table(tom15, tom16, Axis::Rows));
  const bool cols = reproduces_reference(comparison_table(tom15, tom16, Axis::Columns));
  if (rows == cols)
    return uncalibrated(rows ? "both matrix axes reproduce the G15/G16 reference table"
                             : "no matrix axis reproduces the G15/G16 reference table");
  Calibration c;
  c.calibrated = true;
  c.orientation.published_columns = rows ? Axis::Rows : Axis::Columns;
  c.note = std::string("G15/G16 reference column table reproduced by matrix ") +
           axis_name(c.orientation.published_columns);
  return c;
}

Calibration calibrate_from_catalog(const std::filesystem::path& catalog,
                                   const ComputeOptions& options) {
  try {
    const auto records = load_catalog(catalog, 64);
    const GroupRecord *g15 = nullptr, *g16 = nullptr;
    for (const auto& r : records) {
      if (r.catalog_id == 15) g15 = &r;
      if (r.catalog_id == 16) g16 = &r;
    }
    if (!g15 || !g16) return uncalibrated("groups (64,15) and (64,16) not in catalog");
    return calibrate_orientation(compute_marks(*g15, options), compute_marks(*g16, options));
  } catch (const std::exception& e) {
    return uncalibrated(std::string("order-64 catalog unavailable: ") + e.what());
  }
}

std::string calibration_header(const Calibration& c) {
  std::string out = "# orientation: published column tables = matrix ";
  out += axis_name(c.orientation.published_columns);
  out += c.orientation.published_columns == Axis::Rows ? " (acting subgroup U_i fixed)"
                                                       : " (coset space G/U_j fixed)";
  out += c.calibrated ? "; calibrated: " : "; NOT calibrated: ";
  out += c.note;
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------

EntryTable entry_table(const std::vector<GroupRecord>& records,
                       const std::vector<MarksMatrix>& tables) {
  EntryTable t;
  std::vector<EntryMultiset> entries;
  std::set<Mark> present;
  for (const auto& m : tables) {
    entries.push_back(entries_invariant(m.entries));
    for (const auto& [v, k] : entries.back()) present.insert(v);
  }
  t.values.assign(present.begin(), present.end());
  if (!records.empty()) t.order = records.front().order;
  for (std::size_t i = 0; i < records.size(); ++i) {
    EntryTable::Line line{records[i].catalog_id, tables[i].size(), {}};
    for (Mark v : t.values) line.counts.push_back(entries[i].multiplicity(v));
    t.lines.push_back(std::move(line));
  }
  return t;
}

std::string to_latex(const EntryTable& t) {
  std::ostringstream out;
  out << "\\begin{longtable}{c|c||";
  for (std::size_t k = 0; k < t.values.size(); ++k) out << (k ? "|c" : "c");
  out << "}\n\tGroup & Classes";
  for (Mark v : t.values) out << " & \\#" << v;
  out << "\\\\\n";
  for (const auto& l : t.lines) {
    out << '\t' << l.catalog_id << " &" << l.classes;
    for (auto c : l.counts) out << " &" << c;
    out << "\\\\\n";
  }
  out << "\\end{longtable}\n";
  return out.str();
}

std::string to_tsv(const EntryTable& t) {
  std::ostringstream out;
  out << "group\tclasses";
  for (Mark v : t.values) out << "\t#" << v;
  out << '\n';
  for (const auto& l : t.lines) {
    out << l.catalog_id << '\t' << l.classes;
    for (auto c : l.counts) out << '\t' << c;
    out << '\n';
  }
  return out.str();
}

std::vector<std::pair<std::size_t, std::size_t>> entry_equal_id_pairs(
    const std::vector<GroupRecord>& records, const std::vector<MarksMatrix>& tables) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto [i, j] : find_equal_entry_pairs(tables)) {
    const auto a = records[i].catalog_id, b = records[j].catalog_id;
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

std::vector<PairOutcome> VerifyResult::failures() const {
  std::vector<PairOutcome> out;
  for (const auto& p : pairs)
    if (p.separator == "none") out.push_back(p);
  return out;
}

VerifyResult verify_catalog(const std::vector<GroupRecord>& records,
                            const std::vector<MarksMatrix>& tables,
                            const Orientation& orientation, unsigned threads, bool force_exact) {
  if (records.size() != tables.size()) throw InputError("one table per catalog record expected");
  const std::size_t n = records.size();
  std::vector<Fingerprint> prints(n);
  parallel_for(n, threads, [&](std::size_t i) { prints[i] = fingerprint(tables[i]); });

  struct Row {
    std::vector<PairOutcome> outcomes;
    std::size_t decider_runs = 0;
  };
  std::vector<Row> rows(n);
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto separator = first_separator(prints[i], prints[j], orientation);
      if (!separator || force_exact) {
        ++rows[i].decider_runs;
        const bool iso = is_isomorphic(tables[i], tables[j]).isomorphic;
        if (iso)
          separator = "none";
        else if (!separator)
          separator = "exact";
      }
      const auto a = records[i].catalog_id, b = records[j].catalog_id;
      rows[i].outcomes.push_back({std::min(a, b), std::max(a, b), *separator});
    }
  });

  VerifyResult r;
  r.order = n ? records.front().order : 0;
  r.groups = n;
  for (const char* key : {"entries", "columns", "rows", "exact", "none"}) r.separator_counts[key] = 0;
  for (auto& row : rows) {
    r.decider_runs += row.decider_runs;
    for (auto& p : row.outcomes) {
      ++r.separator_counts[p.separator];
      r.pairs.push_back(std::move(p));
    }
  }
  std::sort(r.pairs.begin(), r.pairs.end(), [](const PairOutcome& x, const PairOutcome& y) {
    return std::tie(x.id_a, x.id_b) < std::tie(y.id_a, y.id_b);
  });
  r.pass = r.separator_counts["none"] == 0;
  return r;
}

std::string verify_summary(const VerifyResult& r, const Calibration& c) {
  std::ostringstream out;
  out << "# verify order " << r.order << ": " << r.groups << " groups, " << r.pairs.size()
      << " pairs\n";
  out << calibration_header(c);
  out << "separator\tpairs\n";
  for (const char* key : {"entries", "columns", "rows", "exact", "none"})
    out << key << '\t' << r.separator_counts.at(key) << '\n';
  out << "decider_runs\t" << r.decider_runs << '\n';
  for (const auto& p : r.pairs)
    if (p.separator != "entries")
      out << "pair\t" << p.id_a << '\t' << p.id_b << '\t' << p.separator << '\n';
  for (const auto& p : r.failures())
    out << "FAIL: groups " << p.id_a << " and " << p.id_b
        << " have isomorphic tables of marks\n";
  out << (r.pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string verify_pairs_tsv(const VerifyResult& r) {
  std::ostringstream out;
  out << "group_a\tgroup_b\tseparator\n";
  for (const auto& p : r.pairs) out << p.id_a << '\t' << p.id_b << '\t' << p.separator << '\n';
  return out.str();
}

}  // namespace tom
