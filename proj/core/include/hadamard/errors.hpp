#pragma once

#include <stdexcept>
#include <string>

namespace hadamard {

// Operands whose shapes do not fit together (ambient dimension, variable
// count, column count).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical hypothesis of an operation does not hold for the given
// input. The message names the violated hypothesis.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A randomized procedure ran out of its retry or sample budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hadamard
