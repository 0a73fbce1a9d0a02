#include "hadamard/projective.hpp"

#include <algorithm>
#include <string>

#include "hadamard/errors.hpp"

namespace hadamard {

PPoint::PPoint(QVector coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw PreconditionError("projective point needs at least one coordinate");
  if (std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; })) {
    throw PreconditionError("projective point with all coordinates zero");
  }
}

std::size_t PPoint::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(coords_.begin(), coords_.end(), [](const Rational& c) { return c != 0; }));
}

PPoint PPoint::normalized() const {
  auto it = std::find_if(coords_.begin(), coords_.end(), [](const Rational& c) { return c != 0; });
  Rational lead = *it;
  QVector out(coords_);
  for (auto& c : out) c /= lead;
  return PPoint(std::move(out));
}

bool operator==(const PPoint& p, const PPoint& q) {
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] * q[j] != p[j] * q[i]) return false;
    }
  }
  return true;
}

std::optional<PPoint> hadamard_point(const PPoint& p, const PPoint& q) {
  if (p.size() != q.size()) {
    throw DimensionError("Hadamard product of points in P^" + std::to_string(p.ambient_dim()) +
                         " and P^" + std::to_string(q.ambient_dim()));
  }
  QVector out(p.size());
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = p[i] * q[i];
    any = any || out[i] != 0;
  }
  if (!any) return std::nullopt;
  return PPoint(std::move(out));
}

std::size_t delta_index(const PPoint& p) { return p.nonzero_count() - 1; }

LinSpace::LinSpace(QMatrix generators) : gens_(std::move(generators)) {
  if (gens_.rows() == 0 || gens_.cols() == 0) throw PreconditionError("linear space needs a generator");
  if (rank(gens_) != gens_.rows()) throw PreconditionError("generator matrix is not of full row rank");
}

std::optional<LinSpace> LinSpace::span_of(const QMatrix& rows) {
  auto keep = independent_rows(rows);
  if (keep.empty()) return std::nullopt;
  return LinSpace(rows.select_rows(keep));
}

LinSpace LinSpace::whole(std::size_t n) { return LinSpace(QMatrix::identity(n + 1)); }

LinSpace LinSpace::point(const PPoint& p) {
  QMatrix m(0, p.size());
  m.append_row(p.coords());
  return LinSpace(std::move(m));
}

std::optional<LinSpace> LinSpace::from_equations(const QMatrix& equations) {
  auto basis = nullspace(equations);
  if (basis.empty()) return std::nullopt;
  return LinSpace(QMatrix::from_rows(basis));
}

bool LinSpace::contains(const PPoint& p) const {
  if (p.size() != gens_.cols()) throw DimensionError("point and linear space live in different P^n");
  QMatrix m = gens_;
  m.append_row(p.coords());
  return rank(m) == gens_.rows();
}

bool LinSpace::contains(const LinSpace& other) const {
  if (other.gens_.cols() != gens_.cols()) throw DimensionError("linear spaces live in different P^n");
  return rank(gens_.stacked(other.gens_)) == gens_.rows();
}

QMatrix LinSpace::equations() const {
  auto basis = nullspace(gens_);
  return QMatrix::from_rows(basis, gens_.cols());
}

bool operator==(const LinSpace& a, const LinSpace& b) {
  if (a.gens_.cols() != b.gens_.cols() || a.gens_.rows() != b.gens_.rows()) return false;
  return rank(a.gens_.stacked(b.gens_)) == a.gens_.rows();
}

std::optional<LinSpace> intersect(std::span<const LinSpace> spaces) {
  if (spaces.empty()) throw DimensionError("intersection of no spaces");
  const std::size_t cols = spaces.front().generators().cols();
  QMatrix eq(0, cols);
  for (const auto& s : spaces) {
    if (s.generators().cols() != cols) throw DimensionError("linear spaces live in different P^n");
    eq = eq.stacked(s.equations());
  }
  if (eq.rows() == 0) return LinSpace::whole(cols - 1);
  return LinSpace::from_equations(eq);
}

PlueckerVector::PlueckerVector(std::size_t ambient_dim, std::size_t dim,
                               std::map<IndexSet, Rational> entries)
    : n_(ambient_dim), m_(dim), entries_(std::move(entries)) {}

Rational PlueckerVector::bracket(std::span<const std::size_t> indices) const {
  if (indices.size() != m_ + 1) throw DimensionError("bracket has the wrong number of indices");
  for (std::size_t i : indices) {
    if (i > n_) throw DimensionError("bracket index " + std::to_string(i) + " out of range");
  }
  int sign = sort_sign(indices);
  if (sign == 0) return 0;
  IndexSet key(indices.begin(), indices.end());
  std::sort(key.begin(), key.end());
  auto it = entries_.find(key);
  Rational v = it == entries_.end() ? Rational(0) : it->second;
  return sign > 0 ? v : Rational(-v);
}

bool PlueckerVector::has_vanishing_entry() const { return first_vanishing_entry().has_value(); }

std::optional<IndexSet> PlueckerVector::first_vanishing_entry() const {
  for (const auto& [k, v] : entries_) {
    if (v == 0) return k;
  }
  return std::nullopt;
}

bool PlueckerVector::proportional_to(const PlueckerVector& other) const {
  if (n_ != other.n_ || m_ != other.m_) return false;
  // cross products over all pairs of keys
  std::vector<const Rational*> a, b;
  for (const auto& [k, v] : entries_) {
    a.push_back(&v);
    auto it = other.entries_.find(k);
    if (it == other.entries_.end()) return false;
    b.push_back(&it->second);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (*a[i] * *b[j] != *a[j] * *b[i]) return false;
    }
  }
  return true;
}

PlueckerVector pluecker(const LinSpace& space) {
  const QMatrix& g = space.generators();
  std::map<IndexSet, Rational> entries;
  for (auto& cols : subsets(g.cols(), g.rows())) {
    entries.emplace(cols, determinant(g.select_columns(cols)));
  }
  return PlueckerVector(space.ambient_dim(), space.dim(), std::move(entries));
}

std::optional<LinSpace> point_times_space(const PPoint& p, const LinSpace& space) {
  const QMatrix& g = space.generators();
  if (p.size() != g.cols()) {
    throw DimensionError("point in P^" + std::to_string(p.ambient_dim()) + " times space in P^" +
                         std::to_string(space.ambient_dim()));
  }
  QMatrix scaled = g;
  for (std::size_t i = 0; i < scaled.rows(); ++i) {
    for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= p[j];
  }
  return LinSpace::span_of(scaled);
}

LinSpace line_through(const PPoint& p, const PPoint& q) {
  if (p.size() != q.size()) throw DimensionError("points live in different P^n");
  if (p == q) throw PreconditionError("line through two equal points");
  QMatrix m(0, p.size());
  m.append_row(p.coords());
  m.append_row(q.coords());
  return LinSpace(std::move(m));
}

namespace {

void require_constant_column_sums(const IntMatrix& a, const char* name) {
  if (a.cols() == 0) return;
  Integer first = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) first += a(i, 0);
  for (std::size_t j = 1; j < a.cols(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, j);
    if (s != first) {
      throw PreconditionError(std::string("toric matrix ") + name + " does not have constant column sums");
    }
  }
}

}  // namespace

IntMatrix toric_concat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("toric matrices have different column counts");
  require_constant_column_sums(a, "A");
  require_constant_column_sums(b, "B");
  return a.stacked(b);
}

PPoint sample_point(const LinSpace& space, Rng& rng, const SampleOptions& options) {
  const QMatrix& g = space.generators();
  for (std::size_t attempt = 0; attempt < options.retry_budget; ++attempt) {
    QVector coords(g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
      Rational c = rng.coefficient();
      if (c == 0) continue;
      for (std::size_t j = 0; j < g.cols(); ++j) coords[j] += c * g(i, j);
    }
    if (std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; })) continue;
    PPoint p(std::move(coords));
    if (options.avoid_delta && delta_index(p) <= *options.avoid_delta) continue;
    return p;
  }
  throw BudgetExhausted("sampling budget exhausted: the space appears to lie in Delta_" +
                        (options.avoid_delta ? std::to_string(*options.avoid_delta) : std::string("?")));
}

}  // namespace hadamard
