#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hadamard/projective.hpp"
#include "hadamard/sparse_poly.hpp"

namespace hadamard {

// (r+1) x (n+1) matrix whose row i is a_{0j}^{r-i} a_{1j}^i for the two
// generator rows a_0, a_1 of the line. Spans L^{*r} when the line misses
// Delta_{n-2}. Throws PreconditionError if `line` is not a line.
QMatrix line_power_matrix(const LinSpace& line, std::size_t r);

// Product of the line's brackets [i_j, i_k] over all pairs of `indices`
// (r = indices.size() - 1). This is the Pluecker coordinate of L^{*r} at
// `indices`.
Rational line_power_pluecker(const PlueckerVector& line, std::span<const std::size_t> indices);

// The hyperplane L^{*(n-1)}: coefficient of x_i is
// (-1)^{n+i} * prod_{j<k, j,k != i} [jk]. Requires n >= 2.
SparsePoly power_hyperplane(const PlueckerVector& line);

// Maximal minors of line_power_matrix(line, r) with the row (x_0..x_n)
// appended, one per (r+2)-subset of columns in lexicographic order, each
// made primitive. Requires r < n.
std::vector<SparsePoly> power_linear_equations(const LinSpace& line, std::size_t r);

struct PowerSpanResult {
  LinSpace span;
  std::size_t samples_used = 0;
};

// Row space of sampled r-fold Hadamard products of random points of
// `space`. Sampling stops once `stable_rounds` consecutive new samples leave
// the rank unchanged (or the span is all of P^n). Throws BudgetExhausted if
// that does not happen within `budget` samples.
PowerSpanResult sampled_power_span(const LinSpace& space, std::size_t r, std::size_t budget,
                                   std::uint64_t seed, std::size_t stable_rounds = 3);

// Hadamard product of a list of points; nullopt if undefined.
std::optional<PPoint> hadamard_product(std::span<const PPoint> points);

}  // namespace hadamard
