#include "tom/multiset.hpp"

namespace tom {

EntryMultiset entries_invariant(const SquareMatrix& m) {
  return EntryMultiset::from_sequence(m.data());
}

LineMultiset rows_invariant(const SquareMatrix& m) {
  std::vector<EntryMultiset> lines;
  lines.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) lines.push_back(EntryMultiset::from_sequence(m.row(i)));
  return LineMultiset::from_values(std::move(lines));
}

LineMultiset columns_invariant(const SquareMatrix& m) {
  std::vector<EntryMultiset> lines;
  lines.reserve(m.size());
  for (std::size_t j = 0; j < m.size(); ++j)
    lines.push_back(EntryMultiset::from_sequence(m.column(j)));
  return LineMultiset::from_values(std::move(lines));
}

EntryMultiset flatten(const LineMultiset& lines) {
  std::vector<Mark> values;
  for (const auto& [line, times] : lines)
    for (std::size_t t = 0; t < times; ++t)
      for (const auto& [v, k] : line) values.insert(values.end(), k, v);
  return EntryMultiset::from_values(std::move(values));
}

}  // namespace tom
