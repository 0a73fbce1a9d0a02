#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hadamard/rational.hpp"

namespace hadamard {

using Exponent = std::vector<unsigned>;

// Multivariate polynomial over Q stored as exponent vector -> nonzero
// coefficient. The zero polynomial has no terms.
class SparsePoly {
 public:
  explicit SparsePoly(std::size_t variables = 0) : vars_(variables) {}

  static SparsePoly constant(std::size_t variables, const Rational& c);
  static SparsePoly variable(std::size_t variables, std::size_t index);
  static SparsePoly monomial(std::size_t variables, Exponent exponent, const Rational& c = 1);
  // sum_i coeffs[i] * x_i
  static SparsePoly linear_form(std::span<const Rational> coeffs);

  std::size_t variable_count() const { return vars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  SparsePoly& operator+=(const SparsePoly& rhs);
  SparsePoly& operator-=(const SparsePoly& rhs);
  SparsePoly& operator*=(const Rational& c);
  friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
  friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
  friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs);
  friend SparsePoly operator*(SparsePoly lhs, const Rational& c) { return lhs *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly rhs) { return rhs *= c; }
  SparsePoly operator-() const;
  SparsePoly pow(unsigned k) const;

  Rational evaluate(std::span<const Rational> point) const;

  // Replaces x_i by images[i]; all images share one variable count.
  SparsePoly substitute(std::span<const SparsePoly> images) const;

  // Integer coefficients with gcd 1, lexicographically largest term
  // positive. Zero stays zero.
  SparsePoly primitive() const;

  // e.g. "3*x0^2 - x1*x2 + 1/2". Variables are named prefix + index.
  std::string to_string(std::string_view prefix = "x") const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  std::size_t vars_;
  std::map<Exponent, Rational> terms_;
};

// c with a == c * b, if it exists (b nonzero, or both zero giving c = 1).
std::optional<Rational> proportionality(const SparsePoly& a, const SparsePoly& b);

}  // namespace hadamard
