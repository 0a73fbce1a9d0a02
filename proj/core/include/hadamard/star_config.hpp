#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hadamard/projective.hpp"

namespace hadamard {

// Finite set of pairwise projectively distinct points of P^n.
class PointSet {
 public:
  explicit PointSet(std::size_t ambient_dim) : n_(ambient_dim) {}
  // Duplicates are dropped. Throws DimensionError on an ambient mismatch.
  PointSet(std::size_t ambient_dim, std::span<const PPoint> points);

  // false if an equal point is already present.
  bool insert(const PPoint& p);
  bool contains(const PPoint& p) const;

  std::size_t ambient_dim() const { return n_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<PPoint>& points() const { return points_; }
  const PPoint& operator[](std::size_t i) const { return points_[i]; }

  // Same points regardless of order.
  friend bool operator==(const PointSet& a, const PointSet& b);

 private:
  std::size_t n_;
  std::vector<PPoint> points_;
};

// A product point together with the indices (into Z) of its factors.
struct LabeledPoint {
  PPoint point;
  IndexSet factors;
};

// Products over r-subsets of Z in lexicographic subset order, undefined
// products dropped, projective duplicates dropped (first subset kept).
// Throws PreconditionError if r > |Z|.
std::vector<LabeledPoint> squarefree_products(const PointSet& z, std::size_t r);
PointSet squarefree_power(const PointSet& z, std::size_t r);

struct StarWitness {
  LinSpace ambient;                  // M = L^{*r}
  std::vector<LinSpace> hyperplanes; // H_i = p_i * L^{*(r-1)}
  PointSet points;
  std::vector<IndexSet> point_sources;
  std::size_t r = 0;
};

// Builds the star configuration Z^{r, square-free} in M = L^{*r} for
// collinear Z. Each violated hypothesis (Z not on L, r out of range, a
// vanishing bracket of L, a point with a zero coordinate) raises
// PreconditionError naming the offending bracket or point.
StarWitness build_star(const PointSet& z, const LinSpace& line, std::size_t r);

struct GeneralPositionReport {
  bool ok = true;
  // First violating tuple of hyperplane indices, with the dimensions seen
  // and required (-1 meaning empty).
  IndexSet violating;
  int observed_dim = 0;
  int expected_dim = 0;
};

// Checks every j-fold intersection, j <= r, has dimension r - j and every
// (r+1)-fold one is empty, with r = dim M. Throws PreconditionError if some
// H_i is not a hyperplane of M.
GeneralPositionReport verify_general_position(std::span<const LinSpace> hyperplanes, const LinSpace& ambient);

// General position plus: the points are exactly the r-fold intersections.
bool verify_star(const StarWitness& witness);

}  // namespace hadamard
