#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hadamard/rational.hpp"

namespace hadamard {

using IndexSet = std::vector<std::size_t>;

Integer binomial(std::size_t n, std::size_t k);
Integer factorial(std::size_t n);

// (m_1 + ... + m_r)! / (m_1! ... m_r!)
Integer multinomial(std::span<const std::size_t> parts);

// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<IndexSet> subsets(std::size_t n, std::size_t k);

// All k-subsets of `items`, preserving the order of `items`.
std::vector<IndexSet> subsets_of(std::span<const std::size_t> items, std::size_t k);

// Exponent vectors of length `vars` summing to `degree`, in descending
// lexicographic order (x0^d first).
std::vector<std::vector<unsigned>> compositions(std::size_t vars, unsigned degree);

// Sign of the permutation that sorts `indices` (0 if an index repeats).
int sort_sign(std::span<const std::size_t> indices);

}  // namespace hadamard
