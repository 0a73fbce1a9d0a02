#include "hadamard_cli/codec.hpp"

#include "hadamard/errors.hpp"

namespace hadamard::cli {

const json& require(const json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) throw ValidationError(ptr.empty() ? "/" : ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(ptr + "/" + key, "missing required field");
  return *it;
}

std::size_t size_from_json(const json& j, const std::string& ptr) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ValidationError(ptr, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw ValidationError(ptr, "expected a rational string like \"3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(ptr, e.what());
  }
}

json to_json(const PPoint& p) {
  json out = json::array();
  for (const auto& c : p.coords()) out.push_back(to_json(c));
  return out;
}

PPoint point_from_json(const json& j, const std::string& ptr) {
  if (!j.is_array() || j.empty()) throw ValidationError(ptr, "expected a nonempty array of coordinates");
  QVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], ptr + "/" + std::to_string(i)));
  try {
    return PPoint(std::move(v));
  } catch (const PreconditionError& e) {
    throw ValidationError(ptr, e.what());
  }
}

json to_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

QMatrix matrix_from_json(const json& j, const std::string& ptr) {
  if (!j.is_array() || j.empty()) throw ValidationError(ptr, "expected a nonempty array of rows");
  std::vector<QVector> rows;
  std::size_t cols = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row_ptr = ptr + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].empty()) throw ValidationError(row_ptr, "expected a nonempty row");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols) throw ValidationError(row_ptr, "row length differs from row 0");
    QVector row;
    for (std::size_t k = 0; k < cols; ++k) row.push_back(rational_from_json(j[i][k], row_ptr + "/" + std::to_string(k)));
    rows.push_back(std::move(row));
  }
  return QMatrix::from_rows(rows, cols);
}

json to_json(const LinSpace& s) { return to_json(s.generators()); }

LinSpace space_from_json(const json& j, const std::string& ptr) {
  QMatrix m = matrix_from_json(j, ptr);
  try {
    return LinSpace(std::move(m));
  } catch (const PreconditionError& e) {
    throw ValidationError(ptr, e.what());
  }
}

json to_json(const SparsePoly& f) {
  json out = json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(json::array({e, to_json(c)}));
  return out;
}

SparsePoly form_from_json(const json& j, std::size_t variables, const std::string& ptr) {
  if (!j.is_array()) throw ValidationError(ptr, "expected a list of [exponents, coefficient] terms");
  SparsePoly f(variables);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string term_ptr = ptr + "/" + std::to_string(i);
    const json& t = j[i];
    if (!t.is_array() || t.size() != 2 || !t[0].is_array()) {
      throw ValidationError(term_ptr, "expected [exponent vector, coefficient]");
    }
    if (t[0].size() != variables) {
      throw ValidationError(term_ptr + "/0", "expected " + std::to_string(variables) + " exponents");
    }
    Exponent e;
    for (std::size_t k = 0; k < variables; ++k) {
      e.push_back(static_cast<unsigned>(size_from_json(t[0][k], term_ptr + "/0/" + std::to_string(k))));
    }
    f.add_term(e, rational_from_json(t[1], term_ptr + "/1"));
  }
  return f;
}

json to_json(const PlueckerVector& pl) {
  json out = json::array();
  for (const auto& [s, v] : pl.entries()) out.push_back(json::array({s, to_json(v)}));
  return out;
}

VarietySampler sampler_from_json(const json& j, const std::string& ptr) {
  if (!j.is_object() || j.size() != 1) {
    throw ValidationError(ptr, "expected an object with exactly one of linear, reciprocal, segre, product, power");
  }
  const std::string kind = j.begin().key();
  const json& body = j.begin().value();
  const std::string body_ptr = ptr + "/" + kind;
  if (kind == "linear") return VarietySampler::linear(space_from_json(body, body_ptr));
  if (kind == "reciprocal") return VarietySampler::reciprocal(space_from_json(body, body_ptr));
  if (kind == "segre") {
    if (!body.is_array() || body.size() != 2) throw ValidationError(body_ptr, "expected [a, b]");
    return VarietySampler::segre(size_from_json(body[0], body_ptr + "/0"), size_from_json(body[1], body_ptr + "/1"));
  }
  if (kind == "product") {
    if (!body.is_array() || body.empty()) throw ValidationError(body_ptr, "expected a nonempty list of samplers");
    VarietySampler acc = sampler_from_json(body[0], body_ptr + "/0");
    for (std::size_t i = 1; i < body.size(); ++i) {
      VarietySampler next = sampler_from_json(body[i], body_ptr + "/" + std::to_string(i));
      if (next.ambient_dim() != acc.ambient_dim()) throw ValidationError(body_ptr + "/" + std::to_string(i), "ambient dimension differs");
      acc = VarietySampler::product(acc, next);
    }
    return acc;
  }
  if (kind == "power") {
    std::size_t r = size_from_json(require(body, "r", body_ptr), body_ptr + "/r");
    if (r == 0) throw ValidationError(body_ptr + "/r", "power must be at least 1");
    return VarietySampler::power(sampler_from_json(require(body, "of", body_ptr), body_ptr + "/of"), r);
  }
  throw ValidationError(ptr, "unknown sampler kind '" + kind + "'");
}

}  // namespace hadamard::cli
