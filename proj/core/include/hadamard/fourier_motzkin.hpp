#pragma once

#include <cstddef>
#include <vector>

#include "hadamard/rational.hpp"

namespace hadamard {

enum class Relation { kLessEqual, kLess, kEqual };

// coeffs . x  (rel)  rhs
struct LinearConstraint {
  QVector coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// Exact feasibility over Q^vars: equalities are eliminated by substitution,
// then inequalities by Fourier-Motzkin. Strict inequalities are tracked.
bool feasible(std::vector<LinearConstraint> system, std::size_t vars);

}  // namespace hadamard
