#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace tom {

using Mark = std::int64_t;

// Dense row-major n×n integer matrix.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, Mark fill = 0) : n_(n), data_(n * n, fill) {}
  // Throws InputError if the rows are not all of length rows.size().
  SquareMatrix(std::initializer_list<std::initializer_list<Mark>> rows);

  std::size_t size() const { return n_; }
  Mark& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  Mark operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const Mark> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::vector<Mark> column(std::size_t j) const;
  std::span<const Mark> data() const { return data_; }

  SquareMatrix transposed() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Mark> data_;
};

// (perm_rows, perm_cols) applied as B(i, j) = A(perm_rows[i], perm_cols[j]).
SquareMatrix permute(const SquareMatrix& a, std::span<const std::size_t> perm_rows,
                     std::span<const std::size_t> perm_cols);

}  // namespace tom
