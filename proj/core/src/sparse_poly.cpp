#include "hadamard/sparse_poly.hpp"

#include <sstream>
#include <utility>

#include "hadamard/errors.hpp"

namespace hadamard {

namespace {

void require_same_vars(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("polynomial variable counts differ (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
  }
}

}  // namespace

SparsePoly SparsePoly::constant(std::size_t variables, const Rational& c) {
  SparsePoly p(variables);
  p.add_term(Exponent(variables, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw DimensionError("variable index out of range");
  Exponent e(variables, 0);
  e[index] = 1;
  return monomial(variables, std::move(e));
}

SparsePoly SparsePoly::monomial(std::size_t variables, Exponent exponent, const Rational& c) {
  if (exponent.size() != variables) throw DimensionError("exponent length does not match variable count");
  SparsePoly p(variables);
  p.add_term(exponent, c);
  return p;
}

SparsePoly SparsePoly::linear_form(std::span<const Rational> coeffs) {
  SparsePoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

Rational SparsePoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != vars_) throw DimensionError("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int SparsePoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (unsigned k : e) d += static_cast<int>(k);
    deg = std::max(deg, d);
  }
  return deg;
}

bool SparsePoly::is_homogeneous() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (unsigned k : e) d += static_cast<int>(k);
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
  require_same_vars(vars_, rhs.vars_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
  require_same_vars(vars_, rhs.vars_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
  require_same_vars(lhs.vars_, rhs.vars_);
  SparsePoly out(lhs.vars_);
  Exponent e(lhs.vars_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

SparsePoly SparsePoly::pow(unsigned k) const {
  SparsePoly result = constant(vars_, 1);
  SparsePoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational SparsePoly::evaluate(std::span<const Rational> point) const {
  require_same_vars(vars_, point.size());
  Rational total = 0;
  Rational term;
  Rational power;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      term *= power;
    }
    total += term;
  }
  return total;
}

SparsePoly SparsePoly::substitute(std::span<const SparsePoly> images) const {
  require_same_vars(vars_, images.size());
  std::size_t target_vars = images.empty() ? 0 : images.front().variable_count();
  for (const auto& img : images) require_same_vars(target_vars, img.variable_count());
  // Cache powers of each image as they are requested.
  std::vector<std::vector<SparsePoly>> powers(vars_);
  auto power_of = [&](std::size_t i, unsigned k) -> const SparsePoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target_vars, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  SparsePoly out(target_vars);
  for (const auto& [e, c] : terms_) {
    SparsePoly term = constant(target_vars, c);
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i] != 0) term = term * power_of(i, e[i]);
    }
    out += term;
  }
  return out;
}

SparsePoly SparsePoly::primitive() const {
  if (terms_.empty()) return *this;
  QVector coeffs;
  coeffs.reserve(terms_.size());
  for (const auto& [e, c] : terms_) coeffs.push_back(c);
  Integer l = lcm_of_denominators(coeffs);
  for (auto& c : coeffs) c *= l;
  Integer g = gcd_of_numerators(coeffs);
  Rational factor = make_rational(l, g);
  if (terms_.rbegin()->second < 0) factor = -factor;
  SparsePoly out = *this;
  out *= factor;
  return out;
}

std::string SparsePoly::to_string(std::string_view prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant_term = true;
    for (unsigned k : e) constant_term = constant_term && k == 0;
    bool wrote = false;
    if (mag != 1 || constant_term) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << prefix << i;
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::optional<Rational> proportionality(const SparsePoly& a, const SparsePoly& b) {
  require_same_vars(a.variable_count(), b.variable_count());
  if (b.is_zero()) {
    if (a.is_zero()) return Rational(1);
    return std::nullopt;
  }
  if (a.term_count() != b.term_count()) return std::nullopt;
  const auto& [eb, cb] = *b.terms().begin();
  Rational c = a.coefficient(eb) / cb;
  if (c == 0) return std::nullopt;
  for (const auto& [e, v] : b.terms()) {
    if (a.coefficient(e) != c * v) return std::nullopt;
  }
  return c;
}

}  // namespace hadamard
