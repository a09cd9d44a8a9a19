#include "tom/compare.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

#include "tom/errors.hpp"

namespace tom {

const char* axis_name(Axis a) { return a == Axis::Rows ? "rows" : "columns"; }

Axis other_axis(Axis a) { return a == Axis::Rows ? Axis::Columns : Axis::Rows; }

LineMultiset lines_invariant(const SquareMatrix& m, Axis axis) {
  return axis == Axis::Rows ? rows_invariant(m) : columns_invariant(m);
}

Fingerprint fingerprint(const MarksMatrix& m) {
  std::vector<Mark> orders(m.class_orders.begin(), m.class_orders.end());
  return {entries_invariant(m.entries), rows_invariant(m.entries), columns_invariant(m.entries),
          EntryMultiset::from_values(std::move(orders))};
}

bool verify_witness(const SquareMatrix& a, const SquareMatrix& b,
                    const std::vector<std::size_t>& pi) {
  const std::size_t n = a.size();
  if (b.size() != n || pi.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t x : pi) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != b(pi[i], pi[j])) return false;
  return true;
}

SquareMatrix conjugate(const SquareMatrix& a, const std::vector<std::size_t>& pi) {
  const std::size_t n = a.size();
  if (pi.size() != n) throw InputError("permutation size does not match matrix size");
  SquareMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(pi[i], pi[j]) = a(i, j);
  return b;
}

MarksMatrix conjugate(const MarksMatrix& a, const std::vector<std::size_t>& pi) {
  MarksMatrix b = a;
  b.entries = conjugate(a.entries, pi);
  for (std::size_t i = 0; i < pi.size(); ++i) b.class_orders[pi[i]] = a.class_orders[i];
  return b;
}

namespace {

using Coloring = std::vector<std::size_t>;

// Individualization-refinement search for π with a(i,j) = b(π(i),π(j)).
// Vertices 0..n-1 are the indices of a, n..2n-1 those of b; both sides are
// colored jointly so equal colors mean "may correspond".
class PermutationSearch {
 public:
  PermutationSearch(const SquareMatrix& a, const SquareMatrix& b) : a_(a), b_(b), n_(a.size()) {}

  std::optional<std::vector<std::size_t>> run(const std::vector<std::size_t>& seed_keys_a,
                                              const std::vector<std::size_t>& seed_keys_b) {
    if (n_ == 0) return std::vector<std::size_t>{};
    Coloring colors = seed(seed_keys_a, seed_keys_b);
    if (colors.empty()) return std::nullopt;
    if (search(colors)) return witness_;
    return std::nullopt;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  Mark at(std::size_t v, std::size_t k) const { return v < n_ ? a_(v, k) : b_(v - n_, k - n_); }

  // Renumbers colors by the sorted order of the signatures; returns the
  // number of distinct colors.
  template <class Key>
  std::size_t rank(const std::vector<Key>& keys, Coloring& colors) const {
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
    std::size_t c = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k > 0 && keys[order[k - 1]] < keys[order[k]]) ++c;
      colors[order[k]] = c;
    }
    return keys.empty() ? 0 : c + 1;
  }

  bool balanced(const Coloring& colors, std::size_t n_colors) const {
    std::vector<long> diff(n_colors, 0);
    for (std::size_t v = 0; v < 2 * n_; ++v) diff[colors[v]] += v < n_ ? 1 : -1;
    return std::all_of(diff.begin(), diff.end(), [](long d) { return d == 0; });
  }

  Coloring seed(const std::vector<std::size_t>& keys_a, const std::vector<std::size_t>& keys_b) {
    using Key = std::tuple<std::size_t, Mark, EntryMultiset, EntryMultiset>;
    std::vector<Key> keys(2 * n_);
    for (std::size_t v = 0; v < 2 * n_; ++v) {
      const SquareMatrix& m = v < n_ ? a_ : b_;
      const std::size_t i = v < n_ ? v : v - n_;
      const std::size_t extra = v < n_ ? keys_a[i] : keys_b[i];
      keys[v] = {extra, m(i, i), EntryMultiset::from_sequence(m.row(i)),
                 EntryMultiset::from_sequence(m.column(i))};
    }
    Coloring colors(2 * n_);
    const std::size_t n_colors = rank(keys, colors);
    if (!balanced(colors, n_colors)) return {};
    return colors;
  }

  // Splits colors by (own color, multiset of (color of k, M(v,k), M(k,v)))
  // until stable. False if the two sides stop matching.
  bool refine(Coloring& colors) const {
    std::size_t n_colors = *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<std::vector<Mark>> keys(2 * n_);
    std::vector<std::array<Mark, 3>> triples(n_);
    for (;;) {
      for (std::size_t v = 0; v < 2 * n_; ++v) {
        const std::size_t base = v < n_ ? 0 : n_;
        for (std::size_t k = 0; k < n_; ++k)
          triples[k] = {static_cast<Mark>(colors[base + k]), at(v, base + k), at(base + k, v)};
        std::sort(triples.begin(), triples.end());
        auto& key = keys[v];
        key.clear();
        key.reserve(1 + 3 * n_);
        key.push_back(static_cast<Mark>(colors[v]));
        for (const auto& t : triples) key.insert(key.end(), t.begin(), t.end());
      }
      const std::size_t refined = rank(keys, colors);
      if (!balanced(colors, refined)) return false;
      if (refined == n_colors) return true;
      n_colors = refined;
    }
  }

  bool search(Coloring& colors) {
    ++nodes_;
    if (!refine(colors)) return false;

    const std::size_t n_colors = *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<std::size_t> cell_size(n_colors, 0);
    for (std::size_t v = 0; v < n_; ++v) ++cell_size[colors[v]];

    // Smallest non-trivial cell, lowest vertex first.
    std::size_t pick = n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (cell_size[colors[v]] < 2) continue;
      if (pick == n_ || cell_size[colors[v]] < cell_size[colors[pick]]) pick = v;
    }

    if (pick == n_) {
      std::vector<std::size_t> by_color(n_colors);
      for (std::size_t w = 0; w < n_; ++w) by_color[colors[n_ + w]] = w;
      std::vector<std::size_t> pi(n_);
      for (std::size_t v = 0; v < n_; ++v) pi[v] = by_color[colors[v]];
      if (!verify_witness(a_, b_, pi)) return false;
      witness_ = std::move(pi);
      return true;
    }

    for (std::size_t w = n_; w < 2 * n_; ++w) {
      if (colors[w] != colors[pick]) continue;
      Coloring next = colors;
      next[pick] = next[w] = n_colors;
      if (search(next)) return true;
    }
    return false;
  }

  const SquareMatrix& a_;
  const SquareMatrix& b_;
  std::size_t n_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> witness_;
};

IsoVerdict refuted(std::string certificate) {
  IsoVerdict v;
  v.certificate = std::move(certificate);
  return v;
}

IsoVerdict decide(const SquareMatrix& a, const SquareMatrix& b,
                  const std::vector<std::size_t>& keys_a, const std::vector<std::size_t>& keys_b) {
  PermutationSearch search(a, b);
  IsoVerdict verdict;
  verdict.witness = search.run(keys_a, keys_b);
  verdict.isomorphic = verdict.witness.has_value();
  verdict.search_nodes = search.nodes();
  return verdict;
}

}  // namespace

IsoVerdict is_isomorphic(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.size() != b.size()) return refuted("dimension");
  if (entries_invariant(a) != entries_invariant(b)) return refuted("entries");
  if (rows_invariant(a) != rows_invariant(b)) return refuted("rows");
  if (columns_invariant(a) != columns_invariant(b)) return refuted("columns");
  const std::vector<std::size_t> none(a.size(), 0);
  return decide(a, b, none, none);
}

IsoVerdict is_isomorphic(const MarksMatrix& a, const MarksMatrix& b) {
  if (a.size() != b.size()) return refuted("dimension");
  const Fingerprint fa = fingerprint(a), fb = fingerprint(b);
  if (fa.class_orders != fb.class_orders) return refuted("class_orders");
  if (fa.entries != fb.entries) return refuted("entries");
  if (fa.rows != fb.rows) return refuted("rows");
  if (fa.columns != fb.columns) return refuted("columns");
  return decide(a.entries, b.entries, a.class_orders, b.class_orders);
}

std::vector<std::pair<std::size_t, std::size_t>> find_equal_entry_pairs(
    const std::vector<EntryMultiset>& entries) {
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return entries[x] < entries[y]; });
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t lo = 0; lo < order.size();) {
    std::size_t hi = lo + 1;
    while (hi < order.size() && entries[order[hi]] == entries[order[lo]]) ++hi;
    for (std::size_t x = lo; x < hi; ++x)
      for (std::size_t y = x + 1; y < hi; ++y)
        pairs.emplace_back(std::min(order[x], order[y]), std::max(order[x], order[y]));
    lo = hi;
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<std::pair<std::size_t, std::size_t>> find_equal_entry_pairs(
    const std::vector<MarksMatrix>& tables) {
  std::vector<EntryMultiset> entries;
  entries.reserve(tables.size());
  for (const auto& t : tables) entries.push_back(entries_invariant(t.entries));
  return find_equal_entry_pairs(entries);
}

std::optional<std::string> first_separator(const Fingerprint& a, const Fingerprint& b,
                                           const Orientation& orientation) {
  auto lines = [](const Fingerprint& f, Axis axis) -> const LineMultiset& {
    return axis == Axis::Rows ? f.rows : f.columns;
  };
  if (a.entries != b.entries) return "entries";
  if (lines(a, orientation.published_columns) != lines(b, orientation.published_columns))
    return "columns";
  if (lines(a, orientation.published_rows()) != lines(b, orientation.published_rows()))
    return "rows";
  return std::nullopt;
}

std::vector<InvariantCheck> distinguish_report(const MarksMatrix& a, const MarksMatrix& b,
                                               const Orientation& orientation, bool force_exact) {
  const Fingerprint fa = fingerprint(a), fb = fingerprint(b);
  const auto lines = [](const Fingerprint& f, Axis axis) -> const LineMultiset& {
    return axis == Axis::Rows ? f.rows : f.columns;
  };
  const std::array<InvariantCheck, 3> staged{{
      {"entries", fa.entries == fb.entries},
      {"columns", lines(fa, orientation.published_columns) ==
                      lines(fb, orientation.published_columns)},
      {"rows", lines(fa, orientation.published_rows()) == lines(fb, orientation.published_rows())},
  }};
  std::vector<InvariantCheck> out;
  for (const auto& check : staged) {
    out.push_back(check);
    if (!check.equal && !force_exact) return out;
  }
  out.push_back({"exact", is_isomorphic(a, b).isomorphic});
  return out;
}

}  // namespace tom
