#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "tom/matrix.hpp"

namespace tom {

// A finite multiset in canonical form: (value, multiplicity) pairs with
// strictly increasing values and multiplicities >= 1. Two multisets are
// equal iff their pair sequences are identical. Multisets order
// lexicographically by pair sequence, so they nest: Multiset<Multiset<T>>.
template <class T>
class Multiset {
 public:
  using value_type = T;
  using Pair = std::pair<T, std::size_t>;

  Multiset() = default;

  template <class Range>
  static Multiset from_sequence(const Range& values) {
    std::vector<T> sorted(std::begin(values), std::end(values));
    return from_values(std::move(sorted));
  }

  static Multiset from_values(std::vector<T> values) {
    std::sort(values.begin(), values.end());
    Multiset m;
    for (auto& v : values) {
      if (!m.pairs_.empty() && m.pairs_.back().first == v)
        ++m.pairs_.back().second;
      else
        m.pairs_.emplace_back(std::move(v), 1);
    }
    return m;
  }

  const std::vector<Pair>& pairs() const { return pairs_; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }
  std::size_t distinct() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  // Sum of multiplicities.
  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& p : pairs_) n += p.second;
    return n;
  }

  std::size_t multiplicity(const T& v) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), v,
                               [](const Pair& p, const T& x) { return p.first < x; });
    return (it != pairs_.end() && it->first == v) ? it->second : 0;
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset&, const Multiset&) = default;

 private:
  std::vector<Pair> pairs_;
};

using EntryMultiset = Multiset<Mark>;
using LineMultiset = Multiset<EntryMultiset>;

inline EntryMultiset ms_from_sequence(const std::vector<Mark>& values) {
  return EntryMultiset::from_sequence(values);
}

EntryMultiset entries_invariant(const SquareMatrix& m);
LineMultiset rows_invariant(const SquareMatrix& m);
LineMultiset columns_invariant(const SquareMatrix& m);

// Union of the inner multisets, weighted by outer multiplicity.
EntryMultiset flatten(const LineMultiset& lines);

}  // namespace tom
