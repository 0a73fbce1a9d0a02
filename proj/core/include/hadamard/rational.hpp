#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hadamard {

using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;

// num/den in lowest terms; throws std::invalid_argument on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "n", "-n", "n/d". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

Integer lcm_of_denominators(std::span<const Rational> values);
Integer gcd_of_numerators(std::span<const Rational> values);

// Scales `values` to coprime integers (as Rationals). The first nonzero
// entry becomes positive. All-zero input is returned unchanged.
QVector primitive_vector(std::span<const Rational> values);

}  // namespace hadamard
