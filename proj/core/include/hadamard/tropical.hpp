#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hadamard/combinatorics.hpp"
#include "hadamard/random.hpp"
#include "hadamard/rational.hpp"

namespace hadamard {

// pos(e_i : i in plus) + neg(e_j : j in minus) in R^{n+1} / R 1, with e_i
// the images of the standard basis vectors. plus and minus are sorted and
// disjoint.
struct SignedCone {
  IndexSet plus;
  IndexSet minus;

  std::size_t dim() const { return plus.size() + minus.size(); }
  friend auto operator<=>(const SignedCone&, const SignedCone&) = default;
};

// Weighted fan of signed coordinate cones of one common dimension. The
// weight of a cone is global_weight * multiplicity.
class SignedConeFan {
 public:
  SignedConeFan(std::size_t ambient_dim, std::size_t dim, Rational global_weight = 1)
      : n_(ambient_dim), dim_(dim), global_weight_(std::move(global_weight)) {}

  // Adds `multiplicity` to the cone (inserting it if new). Throws
  // PreconditionError for a cone of the wrong dimension, overlapping
  // plus/minus sets, or out-of-range indices; zero multiplicity is ignored.
  void add(SignedCone cone, const Integer& multiplicity);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return dim_; }
  const Rational& global_weight() const { return global_weight_; }
  const std::map<SignedCone, Integer>& cones() const { return cones_; }

  friend bool operator==(const SignedConeFan&, const SignedConeFan&) = default;

 private:
  std::size_t n_;
  std::size_t dim_;
  Rational global_weight_;
  std::map<SignedCone, Integer> cones_;
};

// Lambda_m: all pos(e_S), |S| = m, multiplicity 1. Requires m <= n.
SignedConeFan standard_tls(std::size_t m, std::size_t n);

// Swaps plus and minus in every cone.
SignedConeFan negate_fan(const SignedConeFan& fan);

// Index of the sum of the cones' lattices inside the saturated lattice of
// their span, in Z^{n+1} / Z 1, via Smith normal form. Throws
// PreconditionError if the sum is not transversal.
Integer lattice_index(std::span<const SignedCone> cones, std::size_t n);

// Minkowski sum with multiplicities sum mult(s_1)...mult(s_r) [N : N_1 + ...],
// global weight divided by delta. Cone tuples whose index sets overlap are
// not transversal and contribute nothing.
SignedConeFan minkowski_sum(std::span<const SignedConeFan> fans, const Integer& delta = 1);

// Each ridge's weighted sum of primitive facet directions lies in the
// ridge's span.
bool is_balanced(const SignedConeFan& fan);

struct ContributingPair {
  SignedCone first;
  SignedCone second;
  Integer first_multiplicity;
  Integer second_multiplicity;
  Integer index;
};

struct StableIntersection {
  Rational multiplicity;
  QVector displacement;
  std::vector<ContributingPair> pairs;
};

// Multiplicity of the origin in the stable intersection of F and G
// (dim F + dim G = n), using displacement v. Throws PreconditionError if the
// dimensions are not complementary or v is not generic for the pair.
StableIntersection stable_mult_origin(const SignedConeFan& f, const SignedConeFan& g, const QVector& v);

// Draws displacement vectors from `seed` until one is generic.
StableIntersection stable_mult_origin(const SignedConeFan& f, const SignedConeFan& g, std::uint64_t seed);

// Random rational vector of length n+1 with pairwise distinct coordinates.
QVector random_displacement(std::size_t n, Rng& rng);

// (dim, multiplicity) of each distinct linear space in a Hadamard product.
using ProductShape = std::vector<std::pair<std::size_t, std::size_t>>;

struct DegreeResult {
  std::size_t dimension = 0;
  Rational degree;
  // n is below prod binom(m_k + r_k, r_k) - 1; the formula is not
  // guaranteed there.
  bool below_bound = false;
};

DegreeResult degree_linear_products(const ProductShape& plain, std::size_t n);
// Requires m + m~ <= n.
DegreeResult degree_with_reciprocals(const ProductShape& plain, const ProductShape& reciprocal, std::size_t n);

struct FanDegreeTranscript {
  std::vector<SignedConeFan> factors;
  Integer delta;
  SignedConeFan sum{0, 0};
  SignedConeFan complement{0, 0};
  StableIntersection intersection;
};

// The same degree computed from fans: Minkowski sum of Lambda_{m_k} (and
// -Lambda for reciprocal spaces), divided by prod r_k! s_l!, stably
// intersected with Lambda_{n - dim}.
FanDegreeTranscript fan_degree(const ProductShape& plain, const ProductShape& reciprocal, std::size_t n,
                               std::uint64_t seed);

}  // namespace hadamard
