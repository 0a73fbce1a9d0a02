#include "hadamard/fourier_motzkin.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "hadamard/errors.hpp"

namespace hadamard {

namespace {

bool all_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

bool trivially_true(const LinearConstraint& c) {
  switch (c.relation) {
    case Relation::kEqual: return c.rhs == 0;
    case Relation::kLessEqual: return c.rhs >= 0;
    case Relation::kLess: return c.rhs > 0;
  }
  return false;
}

// Scale an inequality by a positive factor so its first nonzero coefficient
// is +-1; identical constraints then compare equal.
void normalize(LinearConstraint& c) {
  auto it = std::find_if(c.coeffs.begin(), c.coeffs.end(), [](const Rational& v) { return v != 0; });
  if (it == c.coeffs.end()) return;
  Rational scale = abs(*it);
  for (auto& v : c.coeffs) v /= scale;
  c.rhs /= scale;
}

struct ConstraintLess {
  bool operator()(const LinearConstraint& a, const LinearConstraint& b) const {
    return std::tie(a.coeffs, a.relation, a.rhs) < std::tie(b.coeffs, b.relation, b.rhs);
  }
};

}  // namespace

bool feasible(std::vector<LinearConstraint> system, std::size_t vars) {
  for (const auto& c : system) {
    if (c.coeffs.size() != vars) throw DimensionError("constraint length does not match variable count");
  }

  // Equalities: solve for one variable and substitute everywhere.
  while (true) {
    auto eq = std::find_if(system.begin(), system.end(), [](const LinearConstraint& c) {
      return c.relation == Relation::kEqual && !all_zero(c.coeffs);
    });
    if (eq == system.end()) break;
    LinearConstraint pivot = *eq;
    system.erase(eq);
    std::size_t j = 0;
    while (pivot.coeffs[j] == 0) ++j;
    for (auto& c : system) {
      if (c.coeffs[j] == 0) continue;
      Rational f = c.coeffs[j] / pivot.coeffs[j];
      for (std::size_t k = 0; k < vars; ++k) c.coeffs[k] -= f * pivot.coeffs[k];
      c.rhs -= f * pivot.rhs;
    }
  }

  std::set<LinearConstraint, ConstraintLess> current;
  for (auto& c : system) {
    if (all_zero(c.coeffs)) {
      if (!trivially_true(c)) return false;
      continue;
    }
    normalize(c);
    current.insert(std::move(c));
  }

  for (std::size_t j = 0; j < vars; ++j) {
    std::vector<LinearConstraint> upper, lower;  // coefficient > 0 / < 0
    std::set<LinearConstraint, ConstraintLess> next;
    for (const auto& c : current) {
      if (c.coeffs[j] > 0) {
        upper.push_back(c);
      } else if (c.coeffs[j] < 0) {
        lower.push_back(c);
      } else {
        next.insert(c);
      }
    }
    for (const auto& u : upper) {
      for (const auto& l : lower) {
        // u / u_j + l / |l_j| eliminates x_j
        LinearConstraint combined;
        combined.coeffs.resize(vars);
        Rational fu = 1 / u.coeffs[j];
        Rational fl = -1 / l.coeffs[j];
        for (std::size_t k = 0; k < vars; ++k) combined.coeffs[k] = fu * u.coeffs[k] + fl * l.coeffs[k];
        combined.coeffs[j] = 0;
        combined.rhs = fu * u.rhs + fl * l.rhs;
        combined.relation = (u.relation == Relation::kLess || l.relation == Relation::kLess) ? Relation::kLess
                                                                                            : Relation::kLessEqual;
        if (all_zero(combined.coeffs)) {
          if (!trivially_true(combined)) return false;
          continue;
        }
        normalize(combined);
        next.insert(std::move(combined));
      }
    }
    current = std::move(next);
  }
  return std::all_of(current.begin(), current.end(), trivially_true);
}

}  // namespace hadamard
