#include "tom/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <system_error>

#include "tom/errors.hpp"

namespace tom {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Splits into lines of whitespace-separated tokens; drops blank lines and
// everything after '#'.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && (raw[pos] == ' ' || raw[pos] == '\t' || raw[pos] == '\r')) ++pos;
      std::size_t end = pos;
      while (end < raw.size() && raw[end] != ' ' && raw[end] != '\t' && raw[end] != '\r') ++end;
      if (end > pos) line.tokens.push_back(raw.substr(pos, end - pos));
      pos = end;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

template <class Int>
Int parse_int(std::string_view token, std::size_t line, const char* what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  return value;
}

std::string record_name(const GroupRecord& r) {
  return "group (" + std::to_string(r.order) + ", " + std::to_string(r.catalog_id) + ")";
}

void validate_closure(const GroupRecord& r, std::size_t header_line) {
  std::size_t size = 0;
  try {
    size = close_generators(r.generators, r.order).size();
  } catch (const ResourceError&) {
    throw ParseError(header_line, record_name(r) + ": generators produce more than " +
                                      std::to_string(r.order) + " elements");
  }
  if (size != r.order)
    throw ParseError(header_line, record_name(r) + ": generators produce " + std::to_string(size) +
                                      " elements, declared order " + std::to_string(r.order));
}

}  // namespace

std::vector<GroupRecord> parse_catalog(std::string_view text) {
  std::vector<GroupRecord> records;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::optional<GroupRecord> open;
  std::size_t open_line = 0;

  for (const auto& line : tokenize(text)) {
    const std::string_view keyword = line.tokens[0];
    if (keyword == "group") {
      if (open) throw ParseError(line.number, "'group' before 'end' of the previous record");
      if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'group <order> <id>'");
      GroupRecord r;
      r.order = parse_int<std::size_t>(line.tokens[1], line.number, "group order");
      r.catalog_id = parse_int<std::size_t>(line.tokens[2], line.number, "catalog id");
      if (r.order == 0 || r.catalog_id == 0)
        throw ParseError(line.number, "order and catalog id must be positive");
      if (!seen.emplace(r.order, r.catalog_id).second)
        throw ParseError(line.number, "duplicate " + record_name(r));
      open = std::move(r);
      open_line = line.number;
    } else if (keyword == "gen") {
      if (!open) throw ParseError(line.number, "'gen' outside a group record");
      if (line.tokens.size() < 2) throw ParseError(line.number, "generator has no images");
      std::vector<Point> images;
      images.reserve(line.tokens.size() - 1);
      for (std::size_t k = 1; k < line.tokens.size(); ++k)
        images.push_back(parse_int<Point>(line.tokens[k], line.number, "point index"));
      const std::size_t degree = images.size();
      if (!open->generators.empty() && degree != open->degree)
        throw ParseError(line.number, "generator degree " + std::to_string(degree) +
                                          " differs from " + std::to_string(open->degree));
      try {
        open->generators.emplace_back(std::move(images));
      } catch (const InputError& e) {
        throw ParseError(line.number, e.what());
      }
      open->degree = degree;
    } else if (keyword == "end") {
      if (!open) throw ParseError(line.number, "'end' outside a group record");
      if (line.tokens.size() != 1) throw ParseError(line.number, "unexpected tokens after 'end'");
      if (open->generators.empty())
        throw ParseError(open_line, record_name(*open) + " has no generators");
      validate_closure(*open, open_line);
      records.push_back(std::move(*open));
      open.reset();
    } else {
      throw ParseError(line.number, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (open) throw ParseError(open_line, record_name(*open) + " is missing 'end'");
  return records;
}

std::string write_catalog(const std::vector<GroupRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += "group " + std::to_string(r.order) + " " + std::to_string(r.catalog_id) + "\n";
    for (const auto& g : r.generators) {
      out += "gen";
      for (Point x : g.images()) out += " " + std::to_string(x);
      out += "\n";
    }
    out += "end\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw InputError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::vector<GroupRecord> load_catalog(const std::filesystem::path& path, std::size_t order) {
  std::filesystem::path file = path;
  if (std::filesystem::is_directory(path)) {
    if (order == 0) throw InputError("an order is needed to pick a file from " + path.string());
    file = path / ("order" + std::to_string(order) + ".txt");
  }
  auto records = parse_catalog(read_text_file(file));
  if (order != 0) std::erase_if(records, [&](const GroupRecord& r) { return r.order != order; });
  return records;
}

FiniteGroup build_group(const GroupRecord& record) {
  return build_group(record.generators, record.label(), std::max<std::size_t>(record.order, 1));
}

std::string write_marks(const MarksMatrix& m) {
  const std::size_t n = m.size();
  std::string out = "tom " + std::to_string(m.group_order) + " " +
                    (m.catalog_id ? std::to_string(*m.catalog_id) : std::string("-")) + " " +
                    std::to_string(n) + "\norders";
  for (std::size_t o : m.class_orders) out += " " + std::to_string(o);
  out += "\n";
  for (std::size_t i = 0; i < n; ++i) {
    out += "row";
    for (std::size_t j = 0; j < n; ++j)
      if (const Mark v = m.entries(i, j); v != 0)
        out += " " + std::to_string(j) + ":" + std::to_string(v);
    out += "\n";
  }
  return out;
}

MarksMatrix read_marks(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty marks file");
  if (text.back() != '\n') throw ParseError(0, "marks file must end with a newline");
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty marks file");

  const auto& header = lines[0];
  if (header.tokens.size() != 4 || header.tokens[0] != "tom")
    throw ParseError(header.number, "expected 'tom <group_order> <catalog_id|-> <n>'");
  MarksMatrix m;
  m.group_order = parse_int<std::size_t>(header.tokens[1], header.number, "group order");
  if (header.tokens[2] != "-")
    m.catalog_id = parse_int<std::size_t>(header.tokens[2], header.number, "catalog id");
  const auto n = parse_int<std::size_t>(header.tokens[3], header.number, "class count");
  if (n == 0) throw ParseError(header.number, "class count must be positive");

  if (lines.size() < 2 || lines[1].tokens[0] != "orders")
    throw ParseError(lines.size() < 2 ? header.number : lines[1].number, "expected 'orders' line");
  const auto& orders = lines[1];
  if (orders.tokens.size() != n + 1)
    throw ParseError(orders.number, "expected " + std::to_string(n) + " class orders");
  for (std::size_t k = 1; k <= n; ++k) {
    m.class_orders.push_back(parse_int<std::size_t>(orders.tokens[k], orders.number, "class order"));
    if (k > 1 && m.class_orders[k - 1] < m.class_orders[k - 2])
      throw ParseError(orders.number, "class orders are not ascending");
  }

  if (lines.size() != n + 2)
    throw ParseError(lines.back().number, "expected " + std::to_string(n) + " rows, found " +
                                              std::to_string(lines.size() - 2));
  m.entries = SquareMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = lines[i + 2];
    if (row.tokens[0] != "row") throw ParseError(row.number, "expected 'row'");
    std::optional<std::size_t> last;
    for (std::size_t k = 1; k < row.tokens.size(); ++k) {
      const std::string_view tok = row.tokens[k];
      const auto colon = tok.find(':');
      if (colon == std::string_view::npos) throw ParseError(row.number, "expected '<j>:<v>'");
      const auto j = parse_int<std::size_t>(tok.substr(0, colon), row.number, "column index");
      const auto v = parse_int<Mark>(tok.substr(colon + 1), row.number, "mark");
      if (j >= n) throw ParseError(row.number, "column index out of range");
      if (last && j <= *last) throw ParseError(row.number, "column indices must increase");
      if (v == 0) throw ParseError(row.number, "zero entries must be omitted");
      m.entries(i, j) = v;
      last = j;
    }
  }
  return m;
}

}  // namespace tom
