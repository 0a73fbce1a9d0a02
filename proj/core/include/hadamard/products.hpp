#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hadamard/projective.hpp"
#include "hadamard/samplers.hpp"
#include "hadamard/sparse_poly.hpp"

namespace hadamard {

struct SpaceWithMultiplicity {
  LinSpace space;
  std::size_t multiplicity = 1;
};

// Linear spaces L_1..L_k with multiplicities r_1..r_k >= 1, all in one P^n.
class MultisetOfSpaces {
 public:
  MultisetOfSpaces() = default;
  explicit MultisetOfSpaces(std::vector<SpaceWithMultiplicity> entries);

  const std::vector<SpaceWithMultiplicity>& entries() const { return entries_; }
  std::size_t ambient_dim() const;
  // (dim, multiplicity) pairs
  std::vector<std::pair<std::size_t, std::size_t>> shape() const;

 private:
  std::vector<SpaceWithMultiplicity> entries_;
};

// Rows are the Hadamard monomials prod_i g_i^{*e_i} (|e| = r_k) in the
// generators of each entry, combined across entries by Hadamard product.
// prod_k binom(m_k + r_k, r_k) rows.
QMatrix gen_vandermonde(const MultisetOfSpaces& spaces);

// min{prod_k binom(m_k + r_k, r_k) - 1, n} for (m_k, r_k) pairs.
std::size_t span_dimension_formula(const std::vector<std::pair<std::size_t, std::size_t>>& dims_and_mults,
                                   std::size_t n);

struct IdentifiabilityReport {
  bool ok = true;
  bool in_guarantee_regime = true;  // n >= prod binom(m_k + r_k, r_k) - 1
  std::size_t trials = 0;
  // Two factor tuples with equal products, as normalized points.
  std::optional<std::pair<std::vector<PPoint>, std::vector<PPoint>>> collision;
};

// Samples `trials` factor tuples (r_k points from each L_k) and checks that
// distinct unordered tuples give distinct products.
IdentifiabilityReport identifiability_check(const MultisetOfSpaces& spaces, std::size_t trials, std::uint64_t seed);
IdentifiabilityReport identifiability_check(const LinSpace& space, std::size_t r, std::size_t trials,
                                            std::uint64_t seed);

// <p * T_q, q * T_p>. Throws PreconditionError unless p in Tp and q in Tq.
LinSpace terracini_span(const PPoint& p, const LinSpace& tp, const PPoint& q, const LinSpace& tq);

// min{dim X + dim Y - dim H, dim G}
long expected_dimension(long dim_x, long dim_y, long dim_h, long dim_g);

// Degree-d forms vanishing on the sampled variety: nullspace of the
// monomial evaluation matrix over ceil(1.25 * binom(n+d, d)) samples.
// Forms are returned primitive, in reduced echelon order.
std::vector<SparsePoly> interpolate_forms(const VarietySampler& sampler, unsigned degree, std::uint64_t seed);

struct Hypersurface {
  unsigned degree = 0;
  SparsePoly form;
};

// Smallest d <= max_degree with exactly one vanishing form of degree d.
// Throws PreconditionError when no form exists up to max_degree or the
// first nonzero space of forms has dimension > 1.
Hypersurface interpolate_hypersurface(const VarietySampler& sampler, unsigned max_degree, std::uint64_t seed);

// Values of all monomials of `degree` (compositions order) at `point`.
QVector monomial_row(const PPoint& point, unsigned degree);

}  // namespace hadamard
