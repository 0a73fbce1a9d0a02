#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hadamard/projective.hpp"
#include "hadamard/samplers.hpp"
#include "hadamard/sparse_poly.hpp"

namespace hadamard {

// Polynomial whose variables are brackets followed by the ambient
// coordinates x_0..x_n. Bracket variables are indexed by sorted index sets;
// variable k < first_coordinate is named names[k].
struct BracketExpr {
  SparsePoly poly;
  std::vector<std::string> names;
  std::size_t first_coordinate = 0;

  std::size_t coordinate_count() const { return poly.variable_count() - first_coordinate; }

  // Plugs in bracket values (one per bracket variable) and leaves a form in
  // the coordinates.
  SparsePoly evaluate_brackets(std::span<const Rational> values) const;

  // Bracket notation, e.g. "-[12][13]{03}*x0*x1 + ...".
  std::string to_string() const;
};

// The quadric containing L*M for two lines in P^3. Variables: [ij] (the six
// brackets of L, lexicographic), {ij} (those of M), x0..x3.
const BracketExpr& quadric_bracket_expr();

// The cubic containing P*P for a 2-plane P in P^5. Variables: the twenty
// brackets [ijk], x0..x5. Coefficients come from three orbit
// representatives moved around by permutations of {0..5}; construction
// checks that every permutation gives the same coefficient and throws
// std::logic_error otherwise.
const BracketExpr& cubic_bracket_expr();

// Number of (permutation, representative) pairs whose transported
// coefficient differs from the one in cubic_bracket_expr(). Zero means the
// orbit action is well defined.
std::size_t cubic_orbit_inconsistencies();

// Throws DimensionError unless both are lines in P^3.
SparsePoly quadric_two_lines(const PlueckerVector& l, const PlueckerVector& m);

// Throws DimensionError unless `plane` is a 2-plane in P^5.
SparsePoly cubic_plane_square(const PlueckerVector& plane);

// True iff `form` vanishes exactly at `trials` points drawn from `sampler`.
// Throws DimensionError if the form has the wrong number of variables.
bool verify_identity(const SparsePoly& form, const VarietySampler& sampler, std::size_t trials, std::uint64_t seed);

// True iff form(images) expands to the zero polynomial.
bool verify_identity_symbolic(const SparsePoly& form, std::span<const SparsePoly> images);

// x_i = (sum_k lambda_k A_ki) * (sum_k mu_k B_ki) for generator matrices A
// and B, as polynomials in (lambda, mu).
std::vector<SparsePoly> product_parametrization(const LinSpace& a, const LinSpace& b);

// The quadric with every bracket replaced by its 2x2 minor in generic
// generator entries a_{ki}, b_{ki}, and x_i by the parametrization of L*M.
// Variables: a_{0,0..3}, a_{1,0..3}, b_{0,0..3}, b_{1,0..3}, lambda_0,
// lambda_1, mu_0, mu_1 (20 in total). The result should be zero.
SparsePoly quadric_generic_expansion();

}  // namespace hadamard
