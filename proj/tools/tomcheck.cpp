// tomcheck: tables of marks of small groups and their invariants.
//
//   tomcheck compute    --order 64 --id 15
//   tomcheck scan       --order 64 [--format latex|tsv]
//   tomcheck compare    15 16 --axis rows [--format latex|tsv]
//   tomcheck verify     --order 64 [--exact]
//   tomcheck invariants --order 64 --id 236
//
// Exit codes: 0 success / PASS, 1 FAIL, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tom/catalog.hpp"
#include "tom/errors.hpp"
#include "tom/report.hpp"
#include "tom/simd/kernels.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string catalog;
  std::string cache = "tomcache";
  bool no_cache = false;
  unsigned threads = 1;
  std::size_t order = 64;
  std::size_t id = 0;
  std::size_t id_b = 0;
  std::string axis = "rows";
  std::string format = "tsv";
  std::string out;
  bool exact = false;
};

fs::path catalog_path(const Options& o) {
  if (!o.catalog.empty()) return o.catalog;
  if (const char* env = std::getenv("TOM_CATALOG"); env && *env) return env;
  return TOM_DATA_DIR;
}

tom::ComputeOptions compute_options(const Options& o) {
  tom::ComputeOptions c;
  c.threads = o.threads;
  if (!o.no_cache) c.cache_dir = fs::path(o.cache);
  return c;
}

const tom::GroupRecord& find_record(const std::vector<tom::GroupRecord>& records, std::size_t order,
                                    std::size_t id) {
  for (const auto& r : records)
    if (r.catalog_id == id) return r;
  throw tom::InputError("no group (" + std::to_string(order) + ", " + std::to_string(id) +
                        ") in the catalog");
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    tom::write_text_file(o.out, text);
    std::cerr << "wrote " << o.out << '\n';
  }
}

std::string as_latex_comment(std::string header) {
  for (std::size_t pos = 0; pos < header.size(); pos = header.find('\n', pos) + 1) {
    if (header[pos] == '#') header[pos] = '%';
    if (header.find('\n', pos) == std::string::npos) break;
  }
  return header;
}

std::string format_entries(const tom::EntryMultiset& m) {
  std::string s = "[";
  bool first = true;
  for (const auto& [v, k] : m) {
    s += (first ? "" : " ") + std::to_string(v) + ":" + std::to_string(k);
    first = false;
  }
  return s + "]";
}

int run_compute(const Options& o) {
  const auto records = tom::load_catalog(catalog_path(o), o.order);
  const auto& record = find_record(records, o.order, o.id);
  const tom::MarksMatrix m = tom::compute_marks(record, compute_options(o));
  if (!o.out.empty()) {
    tom::write_text_file(o.out, tom::write_marks(m));
    std::cout << o.out << '\n';
  } else if (!o.no_cache) {
    std::cout << tom::cache_path(o.cache, o.order, o.id).string() << '\n';
  } else {
    std::cout << tom::write_marks(m);
  }
  return kExitPass;
}

int run_scan(const Options& o) {
  const auto records = tom::load_catalog(catalog_path(o), o.order);
  const auto tables = tom::compute_all(records, compute_options(o));
  const tom::EntryTable table = tom::entry_table(records, tables);
  const auto pairs = tom::entry_equal_id_pairs(records, tables);
  const char* comment = o.format == "latex" ? "%" : "#";
  std::string text = std::string(comment) + " entry multisets, order " + std::to_string(o.order) +
                     ", " + std::to_string(records.size()) + " groups\n";
  text += o.format == "latex" ? tom::to_latex(table) : tom::to_tsv(table);
  text += std::string(comment) + " groups with equal entry multisets: " +
          std::to_string(pairs.size()) + " pairs\n";
  for (auto [a, b] : pairs)
    text += std::string(comment) + " pair " + std::to_string(a) + " " + std::to_string(b) + "\n";
  emit(o, text);
  return kExitPass;
}

int run_compare(const Options& o) {
  const auto opts = compute_options(o);
  const auto records = tom::load_catalog(catalog_path(o), o.order);
  const auto a = tom::compute_marks(find_record(records, o.order, o.id), opts);
  const auto b = tom::compute_marks(find_record(records, o.order, o.id_b), opts);
  const tom::Calibration cal = tom::calibrate_from_catalog(catalog_path(o), opts);
  const tom::Axis axis = o.axis == "rows" ? tom::Axis::Rows : tom::Axis::Columns;

  tom::ComparisonTable t = tom::comparison_table(a, b, axis);
  t.line_kind = axis == cal.orientation.published_columns ? "Columns" : "Rows";
  t.name_a = "G" + std::to_string(o.id);
  t.name_b = "G" + std::to_string(o.id_b);

  std::string header = tom::calibration_header(cal);
  header += "# matrix axis: " + std::string(tom::axis_name(axis)) + " (published name: " +
            t.line_kind + ")\n";
  header += "# line types: " + std::to_string(t.rows.size()) +
            ", differing: " + std::to_string(t.discrepancies()) + "\n";
  if (o.format == "latex")
    emit(o, as_latex_comment(header) + tom::to_latex(t));
  else
    emit(o, header + tom::to_tsv(t));
  return kExitPass;
}

int run_invariants(const Options& o) {
  const auto records = tom::load_catalog(catalog_path(o), o.order);
  const auto m = tom::compute_marks(find_record(records, o.order, o.id), compute_options(o));
  const tom::Fingerprint f = tom::fingerprint(m);
  std::string text = "group\t" + std::to_string(o.order) + "\t" + std::to_string(o.id) + "\n";
  text += "classes\t" + std::to_string(m.size()) + "\n";
  text += "class_orders\t" + format_entries(f.class_orders) + "\n";
  text += "entries\t" + format_entries(f.entries) + "\n";
  for (const auto& [name, lines] : {std::pair{"rows", &f.rows}, std::pair{"columns", &f.columns}}) {
    text += name + std::string("\t") + std::to_string(lines->distinct()) + " types\n";
    for (const auto& [line, times] : *lines)
      text += "  " + std::to_string(times) + "x\t" + format_entries(line) + "\n";
  }
  emit(o, text);
  return kExitPass;
}

int run_verify(const Options& o) {
  const auto opts = compute_options(o);
  const auto records = tom::load_catalog(catalog_path(o), o.order);
  const auto tables = tom::compute_all(records, opts);

  tom::Calibration cal;
  std::optional<std::size_t> i15, i16;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].order == 64 && records[i].catalog_id == 15) i15 = i;
    if (records[i].order == 64 && records[i].catalog_id == 16) i16 = i;
  }
  if (i15 && i16)
    cal = tom::calibrate_orientation(tables[*i15], tables[*i16]);
  else
    cal = tom::calibrate_from_catalog(catalog_path(o), opts);

  const auto result = tom::verify_catalog(records, tables, cal.orientation, o.threads, o.exact);
  std::cout << tom::verify_summary(result, cal);
  if (!o.out.empty()) {
    tom::write_text_file(o.out, tom::verify_pairs_tsv(result));
    std::cerr << "wrote " << o.out << '\n';
  }
  return result.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tables of marks of finite groups and their multiset invariants"};
  app.require_subcommand(1);
  Options o;

  app.add_option("--catalog", o.catalog,
                 "Catalog file or directory of order<N>.txt files (default: $TOM_CATALOG or the "
                 "bundled catalog)");
  app.add_option("--cache", o.cache, "Directory for cached marks tables")->capture_default_str();
  app.add_flag("--no-cache", o.no_cache, "Do not read or write the cache");
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--order", o.order, "Group order")->capture_default_str();
  app.add_option("--out", o.out, "Write the report to this file");
  app.fallthrough();

  auto* compute = app.add_subcommand("compute", "Compute and store the table of marks of one group");
  compute->add_option("--id", o.id, "Catalog id")->required();

  auto* scan = app.add_subcommand("scan", "Entry-multiset table and entry-equal pairs");
  scan->add_option("--format", o.format)->check(CLI::IsMember({"latex", "tsv"}));

  auto* compare = app.add_subcommand("compare", "Compare row or column types of two groups");
  compare->add_option("id_a", o.id, "First catalog id")->required();
  compare->add_option("id_b", o.id_b, "Second catalog id")->required();
  compare->add_option("--axis", o.axis, "Matrix axis")->check(CLI::IsMember({"rows", "columns"}));
  compare->add_option("--format", o.format)->check(CLI::IsMember({"latex", "tsv"}));

  auto* verify = app.add_subcommand("verify", "Certify all pairs of groups of one order");
  verify->add_flag("--exact", o.exact, "Run the exact decider on every pair");

  auto* invariants = app.add_subcommand("invariants", "Print the invariants of one group");
  invariants->add_option("--id", o.id, "Catalog id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return run_compute(o);
    if (*scan) return run_scan(o);
    if (*compare) return run_compare(o);
    if (*verify) return run_verify(o);
    if (*invariants) return run_invariants(o);
  } catch (const tom::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
