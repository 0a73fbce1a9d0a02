#include "hadamard/int_matrix.hpp"

#include <algorithm>
#include <utility>

#include "hadamard/errors.hpp"

namespace hadamard {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged IntMatrix initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::stacked(const IntMatrix& below) const {
  if (cols_ != below.cols_) throw DimensionError("column count mismatch in IntMatrix stack");
  IntMatrix out(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
  return out;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// Moves the smallest nonzero |entry| of the trailing submatrix to (t, t).
// Returns false if the trailing submatrix is zero.
bool bring_min_to_pivot(IntMatrix& a, std::size_t t) {
  std::size_t bi = a.rows(), bj = a.cols();
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (bi == a.rows() || abs(a(i, j)) < abs(a(bi, bj))) {
        bi = i;
        bj = j;
      }
    }
  }
  if (bi == a.rows()) return false;
  swap_rows(a, t, bi);
  swap_cols(a, t, bj);
  return true;
}

}  // namespace

std::vector<Integer> smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (!bring_min_to_pivot(a, t)) break;
    while (true) {
      bool clean = true;
      // Reduce the pivot column and row; any nonzero remainder becomes a
      // smaller pivot candidate.
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t c = t; c < a.cols(); ++c) a(i, c) -= q * a(t, c);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t r = t; r < a.rows(); ++r) a(r, j) -= q * a(r, t);
        if (a(t, j) != 0) clean = false;
      }
      if (clean) {
        // Enforce divisibility: fold a row with a non-multiple entry into
        // row t and repeat.
        std::size_t bad_row = a.rows();
        for (std::size_t i = t + 1; i < a.rows() && bad_row == a.rows(); ++i) {
          for (std::size_t j = t + 1; j < a.cols(); ++j) {
            if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
              bad_row = i;
              break;
            }
          }
        }
        if (bad_row == a.rows()) break;
        for (std::size_t c = t; c < a.cols(); ++c) a(t, c) += a(bad_row, c);
        continue;
      }
      bring_min_to_pivot(a, t);
    }
    if (a(t, t) < 0) a(t, t) = -a(t, t);
  }
  std::vector<Integer> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = abs(a(i, i));
  return diag;
}

}  // namespace hadamard
