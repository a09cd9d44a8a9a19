#include "tom/matrix.hpp"

#include "tom/errors.hpp"

namespace tom {

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<Mark>> rows)
    : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw InputError("matrix rows must all have length " + std::to_string(n_));
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

std::vector<Mark> SquareMatrix::column(std::size_t j) const {
  std::vector<Mark> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)(i, j);
  return out;
}

SquareMatrix SquareMatrix::transposed() const {
  SquareMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SquareMatrix permute(const SquareMatrix& a, std::span<const std::size_t> perm_rows,
                     std::span<const std::size_t> perm_cols) {
  const std::size_t n = a.size();
  if (perm_rows.size() != n || perm_cols.size() != n)
    throw InputError("permutation size does not match matrix size");
  SquareMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(perm_rows[i], perm_cols[j]);
  return b;
}

}  // namespace tom
