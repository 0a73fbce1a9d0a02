#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hadamard/combinatorics.hpp"
#include "hadamard/int_matrix.hpp"
#include "hadamard/qmatrix.hpp"
#include "hadamard/random.hpp"
#include "hadamard/rational.hpp"

namespace hadamard {

// A point of P^n given by n+1 homogeneous coordinates, not all zero.
class PPoint {
 public:
  // Throws PreconditionError if empty or all coordinates vanish.
  explicit PPoint(QVector coords);

  std::size_t ambient_dim() const { return coords_.size() - 1; }
  std::size_t size() const { return coords_.size(); }
  const QVector& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  std::size_t nonzero_count() const;
  // Scaled so the first nonzero coordinate is 1.
  PPoint normalized() const;

  // Projective equality: p_i q_j == p_j q_i for all i, j.
  friend bool operator==(const PPoint& p, const PPoint& q);

 private:
  QVector coords_;
};

// Coordinatewise product, or nullopt when every product vanishes.
std::optional<PPoint> hadamard_point(const PPoint& p, const PPoint& q);

// Smallest i with p in Delta_i, i.e. (number of nonzero coordinates) - 1.
std::size_t delta_index(const PPoint& p);

// A projective linear subspace of P^n, stored as a full-row-rank generator
// matrix with m+1 rows and n+1 columns.
class LinSpace {
 public:
  // Throws PreconditionError unless `generators` has full row rank and at
  // least one row.
  explicit LinSpace(QMatrix generators);

  // Row space of `rows`, keeping a maximal independent subset of the rows in
  // order. nullopt when all rows vanish.
  static std::optional<LinSpace> span_of(const QMatrix& rows);
  static LinSpace whole(std::size_t n);
  static LinSpace point(const PPoint& p);
  // {x : equations * x = 0}; nullopt when that is only the zero vector.
  static std::optional<LinSpace> from_equations(const QMatrix& equations);

  const QMatrix& generators() const { return gens_; }
  std::size_t dim() const { return gens_.rows() - 1; }
  std::size_t ambient_dim() const { return gens_.cols() - 1; }
  PPoint generator(std::size_t i) const { return PPoint(gens_.row_vector(i)); }

  bool contains(const PPoint& p) const;
  bool contains(const LinSpace& other) const;

  // Rows spanning the linear forms vanishing on the space; (n - m) rows.
  QMatrix equations() const;

  friend bool operator==(const LinSpace& a, const LinSpace& b);

 private:
  QMatrix gens_;
};

// Intersection of row spaces via stacked equations; nullopt if empty.
std::optional<LinSpace> intersect(std::span<const LinSpace> spaces);

// Maximal minors of a generator matrix, keyed by sorted column index sets.
class PlueckerVector {
 public:
  PlueckerVector(std::size_t ambient_dim, std::size_t dim, std::map<IndexSet, Rational> entries);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return m_; }
  const std::map<IndexSet, Rational>& entries() const { return entries_; }

  // Bracket at an arbitrary index tuple: 0 on a repeated index, and the sign
  // of the sorting permutation otherwise.
  Rational bracket(std::span<const std::size_t> indices) const;
  Rational bracket(std::initializer_list<std::size_t> indices) const {
    return bracket(std::span<const std::size_t>(indices.begin(), indices.size()));
  }
  bool has_vanishing_entry() const;
  // First sorted index set with a zero entry.
  std::optional<IndexSet> first_vanishing_entry() const;

  // Equal up to a common nonzero scalar.
  bool proportional_to(const PlueckerVector& other) const;

 private:
  std::size_t n_;
  std::size_t m_;
  std::map<IndexSet, Rational> entries_;
};

PlueckerVector pluecker(const LinSpace& space);

// Columns of the generator matrix scaled by p. Throws DimensionError on an
// ambient mismatch; nullopt when every scaled row vanishes.
std::optional<LinSpace> point_times_space(const PPoint& p, const LinSpace& space);

// Throws PreconditionError when p == q projectively.
LinSpace line_through(const PPoint& p, const PPoint& q);

// Stacked exponent matrices of two toric varieties; each input must have
// constant column sums.
IntMatrix toric_concat(const IntMatrix& a, const IntMatrix& b);

struct SampleOptions {
  // Reject samples lying in Delta_i for this i.
  std::optional<std::size_t> avoid_delta;
  std::size_t retry_budget = 64;
};

// Random combination of the generator rows with integer coefficients from
// the generator's coefficient range. Throws BudgetExhausted if every retry
// lands in the avoided stratum.
PPoint sample_point(const LinSpace& space, Rng& rng, const SampleOptions& options = {});

}  // namespace hadamard
