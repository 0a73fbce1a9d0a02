#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hadamard/rational.hpp"

namespace hadamard {

// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  // Throws DimensionError if the rows have unequal lengths. `cols` is used
  // only when `rows` is empty.
  static QMatrix from_rows(std::span<const QVector> rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  QVector row_vector(std::size_t i) const;
  QVector column(std::size_t j) const;

  void append_row(std::span<const Rational> row);

  QMatrix transpose() const;
  QMatrix select_columns(std::span<const std::size_t> cols) const;
  QMatrix select_rows(std::span<const std::size_t> rows) const;
  // Vertical concatenation; column counts must agree.
  QMatrix stacked(const QMatrix& below) const;

  QVector apply(std::span<const Rational> v) const;  // M v
  QMatrix operator*(const QMatrix& rhs) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  QMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

// Reduced row echelon form; pivots are the first nonzero entry scanning
// columns left to right.
RrefResult rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);

// Basis of {v : M v = 0}; one vector per free column of the RREF, with a 1
// in that column.
std::vector<QVector> nullspace(const QMatrix& m);

// Throws DimensionError for non-square input.
Rational determinant(const QMatrix& m);

// Indices of a maximal set of linearly independent rows, greedily in order.
std::vector<std::size_t> independent_rows(const QMatrix& m);

}  // namespace hadamard
