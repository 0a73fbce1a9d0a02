#pragma once

// Independent reference implementations used only by the tests. Nothing here
// shares code with the library's elimination routines.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "hadamard/combinatorics.hpp"
#include "hadamard/projective.hpp"
#include "hadamard/random.hpp"
#include "hadamard/tropical.hpp"

namespace oracle {

using hadamard::Integer;
using hadamard::QMatrix;
using hadamard::QVector;
using hadamard::Rational;

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

// Sum over permutations. Fine up to 7x7 or so.
inline Rational leibniz_det(const QMatrix& m) {
  const std::size_t k = m.rows();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rational total = 0;
  do {
    Rational term = permutation_sign(perm);
    for (std::size_t i = 0; i < k && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Rank as the size of the largest nonvanishing minor (brute force).
inline std::size_t minor_rank(const QMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    for (const auto& rows : hadamard::subsets(m.rows(), k)) {
      for (const auto& cols : hadamard::subsets(m.cols(), k)) {
        if (leibniz_det(m.select_rows(rows).select_columns(cols)) != 0) return k;
      }
    }
  }
  return 0;
}

inline std::vector<Rational> random_vector(std::size_t size, hadamard::Rng& rng, long bound = 50) {
  std::vector<Rational> v(size);
  for (auto& x : v) x = rng.uniform(-bound, bound);
  return v;
}

// Random m-dimensional subspace of P^n with small integer generators.
inline hadamard::LinSpace random_space(std::size_t m, std::size_t n, hadamard::Rng& rng, long bound = 50) {
  for (;;) {
    std::vector<QVector> rows;
    for (std::size_t i = 0; i <= m; ++i) rows.push_back(random_vector(n + 1, rng, bound));
    if (auto s = hadamard::LinSpace::span_of(QMatrix::from_rows(rows, n + 1)); s && s->dim() == m) return *s;
  }
}

// Random line all of whose brackets are nonzero.
inline hadamard::LinSpace random_generic_line(std::size_t n, hadamard::Rng& rng, long bound = 50) {
  for (;;) {
    auto line = random_space(1, n, rng, bound);
    if (!hadamard::pluecker(line).has_vanishing_entry()) return line;
  }
}

// Minkowski sum by enumerating every tuple of cones at once, with the
// lattice index computed from the determinant of a completed basis:
// [N : N_1 + ... + N_r] = gcd of the maximal minors of the stacked
// generators, in the coordinates Z^{n+1}/Z1 = Z^n.
inline Integer index_by_minors(const std::vector<hadamard::SignedCone>& cones, std::size_t n) {
  std::vector<QVector> rows;
  for (const auto& c : cones) {
    for (int sign : {1, -1}) {
      for (std::size_t i : (sign == 1 ? c.plus : c.minus)) {
        QVector row(n);
        if (i < n) {
          row[i] = sign;
        } else {
          for (auto& x : row) x = -sign;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  QMatrix g = QMatrix::from_rows(rows, n);
  Integer acc = 0;
  for (const auto& cols : hadamard::subsets(n, k)) {
    Rational d = leibniz_det(g.select_columns(cols));
    mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), Integer(abs(d.get_num())).get_mpz_t());
  }
  return acc;  // 0 means not transversal
}

inline std::map<hadamard::SignedCone, Integer> brute_minkowski(const std::vector<hadamard::SignedConeFan>& fans) {
  const std::size_t n = fans.front().ambient_dim();
  std::map<hadamard::SignedCone, Integer> out;
  std::vector<std::vector<std::pair<hadamard::SignedCone, Integer>>> lists;
  for (const auto& f : fans) lists.emplace_back(f.cones().begin(), f.cones().end());
  std::vector<std::size_t> pick(fans.size(), 0);
  for (;;) {
    std::vector<hadamard::SignedCone> tuple;
    Integer mult = 1;
    for (std::size_t k = 0; k < fans.size(); ++k) {
      tuple.push_back(lists[k][pick[k]].first);
      mult *= lists[k][pick[k]].second;
    }
    Integer index = index_by_minors(tuple, n);
    if (index != 0) {
      hadamard::SignedCone sum;
      for (const auto& c : tuple) {
        sum.plus.insert(sum.plus.end(), c.plus.begin(), c.plus.end());
        sum.minus.insert(sum.minus.end(), c.minus.begin(), c.minus.end());
      }
      std::sort(sum.plus.begin(), sum.plus.end());
      std::sort(sum.minus.begin(), sum.minus.end());
      bool overlapping = std::adjacent_find(sum.plus.begin(), sum.plus.end()) != sum.plus.end() ||
                         std::adjacent_find(sum.minus.begin(), sum.minus.end()) != sum.minus.end();
      std::vector<std::size_t> both;
      std::set_intersection(sum.plus.begin(), sum.plus.end(), sum.minus.begin(), sum.minus.end(),
                            std::back_inserter(both));
      if (!overlapping && both.empty()) out[sum] += mult * index;
    }
    std::size_t k = 0;
    while (k < fans.size() && ++pick[k] == lists[k].size()) pick[k++] = 0;
    if (k == fans.size()) break;
  }
  return out;
}

}  // namespace oracle
