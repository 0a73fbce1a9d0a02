#include "hadamard/line_powers.hpp"

#include <string>

#include "hadamard/errors.hpp"

namespace hadamard {

namespace {

void require_line(const LinSpace& line) {
  if (line.dim() != 1) {
    throw PreconditionError("expected a line, got a linear space of dimension " + std::to_string(line.dim()));
  }
}

Rational rational_pow(const Rational& base, std::size_t k) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
  return out;
}

}  // namespace

QMatrix line_power_matrix(const LinSpace& line, std::size_t r) {
  require_line(line);
  const QMatrix& g = line.generators();
  QMatrix out(r + 1, g.cols());
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      out(i, j) = rational_pow(g(0, j), r - i) * rational_pow(g(1, j), i);
    }
  }
  return out;
}

Rational line_power_pluecker(const PlueckerVector& line, std::span<const std::size_t> indices) {
  if (line.dim() != 1) throw PreconditionError("Pluecker vector is not that of a line");
  for (std::size_t i : indices) {
    if (i > line.ambient_dim()) {
      throw DimensionError("index " + std::to_string(i) + " out of range for P^" +
                           std::to_string(line.ambient_dim()));
    }
  }
  Rational product = 1;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    for (std::size_t k = j + 1; k < indices.size(); ++k) {
      product *= line.bracket({indices[j], indices[k]});
    }
  }
  return product;
}

SparsePoly power_hyperplane(const PlueckerVector& line) {
  if (line.dim() != 1) throw PreconditionError("Pluecker vector is not that of a line");
  const std::size_t n = line.ambient_dim();
  if (n < 2) throw PreconditionError("power hyperplane needs n >= 2");
  QVector coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational c = ((n + i) % 2 == 0) ? 1 : -1;
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t k = j + 1; k <= n; ++k) {
        if (j != i && k != i) c *= line.bracket({j, k});
      }
    }
    coeffs[i] = c;
  }
  return SparsePoly::linear_form(coeffs);
}

std::vector<SparsePoly> power_linear_equations(const LinSpace& line, std::size_t r) {
  require_line(line);
  const std::size_t n = line.ambient_dim();
  if (r >= n) {
    throw PreconditionError("power_linear_equations needs r < n (r=" + std::to_string(r) +
                            ", n=" + std::to_string(n) + ")");
  }
  QMatrix power = line_power_matrix(line, r);
  std::vector<SparsePoly> out;
  for (const auto& cols : subsets(n + 1, r + 2)) {
    // Expand along the appended row of coordinates (row index r+1).
    QVector coeffs(n + 1);
    for (std::size_t t = 0; t < cols.size(); ++t) {
      IndexSet minor_cols;
      for (std::size_t u = 0; u < cols.size(); ++u) {
        if (u != t) minor_cols.push_back(cols[u]);
      }
      Rational minor = determinant(power.select_columns(minor_cols));
      coeffs[cols[t]] = ((r + 1 + t) % 2 == 0) ? minor : Rational(-minor);
    }
    out.push_back(SparsePoly::linear_form(coeffs).primitive());
  }
  return out;
}

std::optional<PPoint> hadamard_product(std::span<const PPoint> points) {
  if (points.empty()) throw DimensionError("Hadamard product of no points");
  std::optional<PPoint> acc = points.front();
  for (std::size_t i = 1; i < points.size() && acc; ++i) acc = hadamard_point(*acc, points[i]);
  return acc;
}

PowerSpanResult sampled_power_span(const LinSpace& space, std::size_t r, std::size_t budget,
                                   std::uint64_t seed, std::size_t stable_rounds) {
  if (r == 0) return {LinSpace::point(PPoint(QVector(space.ambient_dim() + 1, Rational(1)))), 0};
  Rng rng(seed);
  const std::size_t full = space.ambient_dim() + 1;
  QMatrix rows(0, full);
  std::size_t current_rank = 0;
  std::size_t unchanged = 0;
  for (std::size_t used = 1; used <= budget; ++used) {
    std::vector<PPoint> factors;
    factors.reserve(r);
    for (std::size_t k = 0; k < r; ++k) factors.push_back(sample_point(space, rng));
    auto product = hadamard_product(factors);
    if (!product) continue;
    QMatrix candidate = rows;
    candidate.append_row(product->coords());
    if (rank(candidate) > current_rank) {
      rows = std::move(candidate);
      ++current_rank;
      unchanged = 0;
    } else {
      ++unchanged;
    }
    if (current_rank == full || (current_rank > 0 && unchanged >= stable_rounds)) {
      return {LinSpace(std::move(rows)), used};
    }
  }
  throw BudgetExhausted("sampled span of the " + std::to_string(r) + "-th Hadamard power did not stabilize within " +
                        std::to_string(budget) + " samples");
}

}  // namespace hadamard
