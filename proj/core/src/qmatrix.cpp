#include "hadamard/qmatrix.hpp"

#include <algorithm>
#include <utility>

#include "hadamard/errors.hpp"

namespace hadamard {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged QMatrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(std::span<const QVector> rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  QMatrix m(0, cols);
  m.data_.reserve(rows.size() * cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

QVector QMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

QVector QMatrix::column(std::size_t j) const {
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void QMatrix::append_row(std::span<const Rational> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw DimensionError("row length does not match column count");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

QMatrix QMatrix::select_columns(std::span<const std::size_t> cols) const {
  QMatrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] >= cols_) throw DimensionError("column index out of range");
      out(i, k) = (*this)(i, cols[k]);
    }
  }
  return out;
}

QMatrix QMatrix::select_rows(std::span<const std::size_t> rows) const {
  QMatrix out(0, cols_);
  for (std::size_t r : rows) {
    if (r >= rows_) throw DimensionError("row index out of range");
    out.append_row(row(r));
  }
  return out;
}

QMatrix QMatrix::stacked(const QMatrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw DimensionError("column count mismatch in QMatrix stack");
  QMatrix out = *this;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  out.rows_ += below.rows_;
  return out;
}

QVector QMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionError("vector length does not match column count");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = std::move(acc);
  }
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("inner dimensions do not agree");
  QMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

namespace {

using IntRow = std::vector<Integer>;

IntRow integer_row(std::span<const Rational> r) {
  Integer l = lcm_of_denominators(r);
  IntRow out(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    out[j] = r[j].get_num() * (l / r[j].get_den());
  }
  return out;
}

void remove_content(IntRow& r) {
  Integer g = 0;
  for (const auto& v : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// target <- pivot_value * target - target[col] * pivot_row, then strip content.
void eliminate(IntRow& target, const IntRow& pivot_row, std::size_t col) {
  if (target[col] == 0) return;
  Integer g;
  mpz_gcd(g.get_mpz_t(), target[col].get_mpz_t(), pivot_row[col].get_mpz_t());
  Integer a = pivot_row[col] / g;
  Integer b = target[col] / g;
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (pivot_row[j] == 0) {
      if (target[j] != 0) target[j] *= a;
    } else {
      target[j] = a * target[j] - b * pivot_row[j];
    }
  }
  remove_content(target);
}

struct IntegerEchelon {
  std::vector<IntRow> rows;  // pivot rows in order, fully reduced
  std::vector<std::size_t> pivots;
};

// Fraction-free reduction to reduced echelon form (up to scaling each row).
IntegerEchelon integer_rref(const QMatrix& m) {
  std::vector<IntRow> work;
  work.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntRow r = integer_row(m.row(i));
    remove_content(r);
    work.push_back(std::move(r));
  }
  IntegerEchelon out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols() && next < work.size(); ++col) {
    std::size_t p = next;
    while (p < work.size() && work[p][col] == 0) ++p;
    if (p == work.size()) continue;
    std::swap(work[next], work[p]);
    for (std::size_t i = next + 1; i < work.size(); ++i) eliminate(work[i], work[next], col);
    out.pivots.push_back(col);
    ++next;
  }
  work.resize(next);
  for (std::size_t k = out.pivots.size(); k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) eliminate(work[i], work[k], out.pivots[k]);
  }
  out.rows = std::move(work);
  return out;
}

}  // namespace

RrefResult rref(const QMatrix& m) {
  IntegerEchelon ech = integer_rref(m);
  RrefResult out;
  out.rank = ech.pivots.size();
  out.pivot_columns = ech.pivots;
  out.reduced = QMatrix(m.rows(), m.cols());
  for (std::size_t k = 0; k < ech.rows.size(); ++k) {
    const Integer& piv = ech.rows[k][ech.pivots[k]];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out.reduced(k, j) = make_rational(ech.rows[k][j], piv);
    }
  }
  return out;
}

std::size_t rank(const QMatrix& m) {
  // Forward elimination only.
  std::vector<IntRow> work;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntRow r = integer_row(m.row(i));
    remove_content(r);
    work.push_back(std::move(r));
  }
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols() && next < work.size(); ++col) {
    std::size_t p = next;
    while (p < work.size() && work[p][col] == 0) ++p;
    if (p == work.size()) continue;
    std::swap(work[next], work[p]);
    for (std::size_t i = next + 1; i < work.size(); ++i) eliminate(work[i], work[next], col);
    ++next;
  }
  return next;
}

std::vector<QVector> nullspace(const QMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_columns) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivot_columns[k]] = -r.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss elimination on the integer-scaled rows.
  Integer scale = 1;
  std::vector<IntRow> a;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = lcm_of_denominators(m.row(i));
    scale *= l;
    a.push_back(integer_row(m.row(i)));
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return make_rational(sign * a[n - 1][n - 1], scale);
}

std::vector<std::size_t> independent_rows(const QMatrix& m) {
  std::vector<std::size_t> chosen;
  std::vector<IntRow> basis;  // echelonized chosen rows
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntRow r = integer_row(m.row(i));
    remove_content(r);
    for (std::size_t k = 0; k < basis.size(); ++k) eliminate(r, basis[k], pivots[k]);
    auto it = std::find_if(r.begin(), r.end(), [](const Integer& v) { return v != 0; });
    if (it == r.end()) continue;
    chosen.push_back(i);
    pivots.push_back(static_cast<std::size_t>(it - r.begin()));
    basis.push_back(std::move(r));
  }
  return chosen;
}

}  // namespace hadamard
