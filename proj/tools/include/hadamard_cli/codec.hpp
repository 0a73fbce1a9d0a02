#pragma once

// JSON encoding of the library's values. Rationals are "num/den" strings
// (plain integers print without a denominator); points are arrays of
// rationals, spaces arrays of generator rows, forms lists of
// [exponent vector, coefficient] pairs.

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hadamard/projective.hpp"
#include "hadamard/samplers.hpp"
#include "hadamard/sparse_poly.hpp"

namespace hadamard::cli {

using json = nlohmann::json;

// Malformed input; `pointer` is a JSON pointer to the offending field.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string pointer, const std::string& message)
      : std::runtime_error(pointer + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

const json& require(const json& j, const std::string& key, const std::string& ptr);
std::size_t size_from_json(const json& j, const std::string& ptr);

json to_json(const Rational& q);
Rational rational_from_json(const json& j, const std::string& ptr);

json to_json(const PPoint& p);
PPoint point_from_json(const json& j, const std::string& ptr);

json to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j, const std::string& ptr);

json to_json(const LinSpace& s);
// Accepts an array of generator rows; the rows must be independent.
LinSpace space_from_json(const json& j, const std::string& ptr);

json to_json(const SparsePoly& f);
SparsePoly form_from_json(const json& j, std::size_t variables, const std::string& ptr);

json to_json(const PlueckerVector& pl);

// {"linear": space} | {"reciprocal": space} | {"segre": [a, b]} |
// {"product": [sampler, ...]} | {"power": {"of": sampler, "r": k}}
VarietySampler sampler_from_json(const json& j, const std::string& ptr);

}  // namespace hadamard::cli
