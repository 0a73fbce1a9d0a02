#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hadamard/rational.hpp"

namespace hadamard {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  // Vertical concatenation; throws DimensionError on column mismatch.
  IntMatrix stacked(const IntMatrix& below) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Invariant factors d_1 | d_2 | ... of A, min(rows, cols) entries, all
// nonnegative; zeros (if any) come last.
std::vector<Integer> smith_normal_form(const IntMatrix& a);

}  // namespace hadamard
