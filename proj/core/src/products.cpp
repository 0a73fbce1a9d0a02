#include "hadamard/products.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hadamard/combinatorics.hpp"
#include "hadamard/errors.hpp"

namespace hadamard {

MultisetOfSpaces::MultisetOfSpaces(std::vector<SpaceWithMultiplicity> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw PreconditionError("multiset of spaces is empty");
  for (const auto& e : entries_) {
    if (e.multiplicity == 0) throw PreconditionError("multiplicities must be at least 1");
    if (e.space.ambient_dim() != entries_.front().space.ambient_dim()) {
      throw DimensionError("spaces in a multiset live in different P^n");
    }
  }
}

std::size_t MultisetOfSpaces::ambient_dim() const { return entries_.front().space.ambient_dim(); }

std::vector<std::pair<std::size_t, std::size_t>> MultisetOfSpaces::shape() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : entries_) out.emplace_back(e.space.dim(), e.multiplicity);
  return out;
}

namespace {

// Rows prod_i g_i^{e_i} over exponent vectors |e| = r.
std::vector<QVector> hadamard_monomials(const LinSpace& space, std::size_t r) {
  const QMatrix& g = space.generators();
  std::vector<QVector> rows;
  for (const auto& e : compositions(g.rows(), static_cast<unsigned>(r))) {
    QVector row(g.cols(), Rational(1));
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) {
        for (std::size_t j = 0; j < g.cols(); ++j) row[j] *= g(i, j);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

QMatrix gen_vandermonde(const MultisetOfSpaces& spaces) {
  std::vector<QVector> rows{QVector(spaces.ambient_dim() + 1, Rational(1))};
  for (const auto& entry : spaces.entries()) {
    auto block = hadamard_monomials(entry.space, entry.multiplicity);
    std::vector<QVector> next;
    next.reserve(rows.size() * block.size());
    for (const auto& a : rows) {
      for (const auto& b : block) {
        QVector row(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) row[j] = a[j] * b[j];
        next.push_back(std::move(row));
      }
    }
    rows = std::move(next);
  }
  return QMatrix::from_rows(rows);
}

std::size_t span_dimension_formula(const std::vector<std::pair<std::size_t, std::size_t>>& dims_and_mults,
                                   std::size_t n) {
  Integer product = 1;
  for (const auto& [m, r] : dims_and_mults) product *= binomial(m + r, r);
  Integer bound = product - 1;
  if (bound >= Integer(static_cast<unsigned long>(n))) return n;
  return bound.get_ui();
}

IdentifiabilityReport identifiability_check(const MultisetOfSpaces& spaces, std::size_t trials,
                                            std::uint64_t seed) {
  IdentifiabilityReport report;
  const std::size_t n = spaces.ambient_dim();
  Integer needed = 1;
  for (const auto& [m, r] : spaces.shape()) needed *= binomial(m + r, r);
  report.in_guarantee_regime = Integer(static_cast<unsigned long>(n)) >= needed - 1;

  Rng rng(seed);
  // normalized product -> the factor tuple that produced it, each factor
  // block sorted so unordered tuples compare equal
  std::map<QVector, std::vector<QVector>> seen;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<QVector> key_factors;
    std::vector<PPoint> factors;
    for (const auto& entry : spaces.entries()) {
      std::vector<QVector> block;
      for (std::size_t k = 0; k < entry.multiplicity; ++k) {
        PPoint p = sample_point(entry.space, rng);
        block.push_back(p.normalized().coords());
        factors.push_back(p);
      }
      std::sort(block.begin(), block.end());
      key_factors.insert(key_factors.end(), block.begin(), block.end());
    }
    ++report.trials;
    std::optional<PPoint> product = factors.front();
    for (std::size_t k = 1; k < factors.size() && product; ++k) product = hadamard_point(*product, factors[k]);
    if (!product) continue;
    auto [it, inserted] = seen.try_emplace(product->normalized().coords(), key_factors);
    if (!inserted && it->second != key_factors) {
      report.ok = false;
      std::vector<PPoint> first, second;
      for (const auto& v : it->second) first.emplace_back(v);
      for (const auto& v : key_factors) second.emplace_back(v);
      report.collision.emplace(std::move(first), std::move(second));
      return report;
    }
  }
  return report;
}

IdentifiabilityReport identifiability_check(const LinSpace& space, std::size_t r, std::size_t trials,
                                            std::uint64_t seed) {
  return identifiability_check(MultisetOfSpaces({{space, r}}), trials, seed);
}

LinSpace terracini_span(const PPoint& p, const LinSpace& tp, const PPoint& q, const LinSpace& tq) {
  if (!tp.contains(p)) throw PreconditionError("Terracini: p is not in its tangent space");
  if (!tq.contains(q)) throw PreconditionError("Terracini: q is not in its tangent space");
  QMatrix rows(0, p.size());
  if (auto a = point_times_space(p, tq)) rows = rows.stacked(a->generators());
  if (auto b = point_times_space(q, tp)) rows = rows.stacked(b->generators());
  auto span = LinSpace::span_of(rows);
  if (!span) throw PreconditionError("Terracini span is empty (p * q undefined)");
  return *span;
}

long expected_dimension(long dim_x, long dim_y, long dim_h, long dim_g) {
  return std::min(dim_x + dim_y - dim_h, dim_g);
}

QVector monomial_row(const PPoint& point, unsigned degree) {
  const auto exps = compositions(point.size(), degree);
  QVector row;
  row.reserve(exps.size());
  for (const auto& e : exps) {
    Rational v = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) v *= point[i];
    }
    row.push_back(std::move(v));
  }
  return row;
}

std::vector<SparsePoly> interpolate_forms(const VarietySampler& sampler, unsigned degree, std::uint64_t seed) {
  if (degree == 0) throw PreconditionError("interpolation degree must be at least 1");
  const std::size_t vars = sampler.ambient_dim() + 1;
  const auto exps = compositions(vars, degree);
  const std::size_t monomials = exps.size();
  const std::size_t samples = monomials + (monomials + 3) / 4;  // 25% margin

  Rng rng(seed);
  QMatrix eval(0, monomials);
  for (std::size_t s = 0; s < samples; ++s) eval.append_row(monomial_row(sampler.point(rng), degree));

  auto kernel = nullspace(eval);
  std::vector<SparsePoly> forms;
  if (kernel.empty()) return forms;
  RrefResult reduced = rref(QMatrix::from_rows(kernel));
  for (std::size_t k = 0; k < reduced.rank; ++k) {
    SparsePoly f(vars);
    for (std::size_t j = 0; j < monomials; ++j) f.add_term(exps[j], reduced.reduced(k, j));
    forms.push_back(f.primitive());
  }
  return forms;
}

Hypersurface interpolate_hypersurface(const VarietySampler& sampler, unsigned max_degree, std::uint64_t seed) {
  for (unsigned d = 1; d <= max_degree; ++d) {
    auto forms = interpolate_forms(sampler, d, seed + d);
    if (forms.empty()) continue;
    if (forms.size() > 1) {
      throw PreconditionError("not a hypersurface: " + std::to_string(forms.size()) +
                              " independent forms of degree " + std::to_string(d));
    }
    return {d, std::move(forms.front())};
  }
  throw PreconditionError("no vanishing form of degree <= " + std::to_string(max_degree));
}

}  // namespace hadamard
