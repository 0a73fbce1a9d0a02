#include "hadamard/star_config.hpp"

#include <algorithm>
#include <string>

#include "hadamard/errors.hpp"
#include "hadamard/line_powers.hpp"

namespace hadamard {

namespace {

std::string describe(const PPoint& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ":";
    s += to_string(p[i]);
  }
  return s + "]";
}

std::string describe(const IndexSet& idx) {
  std::string s = "[";
  for (std::size_t i : idx) s += std::to_string(i);
  return s + "]";
}

}  // namespace

PointSet::PointSet(std::size_t ambient_dim, std::span<const PPoint> points) : n_(ambient_dim) {
  for (const auto& p : points) insert(p);
}

bool PointSet::insert(const PPoint& p) {
  if (p.ambient_dim() != n_) throw DimensionError("point does not live in the point set's P^n");
  if (contains(p)) return false;
  points_.push_back(p);
  return true;
}

bool PointSet::contains(const PPoint& p) const {
  return std::any_of(points_.begin(), points_.end(), [&](const PPoint& q) { return q == p; });
}

bool operator==(const PointSet& a, const PointSet& b) {
  if (a.n_ != b.n_ || a.size() != b.size()) return false;
  return std::all_of(a.points_.begin(), a.points_.end(), [&](const PPoint& p) { return b.contains(p); });
}

std::vector<LabeledPoint> squarefree_products(const PointSet& z, std::size_t r) {
  if (r > z.size()) {
    throw PreconditionError("square-free power needs r <= |Z| (r=" + std::to_string(r) +
                            ", |Z|=" + std::to_string(z.size()) + ")");
  }
  if (r == 0) throw PreconditionError("square-free power needs r >= 1");
  std::vector<LabeledPoint> out;
  PointSet seen(z.ambient_dim());
  for (auto& subset : subsets(z.size(), r)) {
    std::vector<PPoint> factors;
    for (std::size_t i : subset) factors.push_back(z[i]);
    auto product = hadamard_product(factors);
    if (!product || !seen.insert(*product)) continue;
    out.push_back({*product, std::move(subset)});
  }
  return out;
}

PointSet squarefree_power(const PointSet& z, std::size_t r) {
  PointSet out(z.ambient_dim());
  for (const auto& lp : squarefree_products(z, r)) out.insert(lp.point);
  return out;
}

StarWitness build_star(const PointSet& z, const LinSpace& line, std::size_t r) {
  if (line.dim() != 1) throw PreconditionError("star configuration needs L to be a line");
  const std::size_t n = line.ambient_dim();
  if (z.ambient_dim() != n) throw DimensionError("points and line live in different P^n");
  if (r == 0 || r > std::min(z.size(), n)) {
    throw PreconditionError("need 1 <= r <= min(|Z|, n) (r=" + std::to_string(r) + ", |Z|=" +
                            std::to_string(z.size()) + ", n=" + std::to_string(n) + ")");
  }
  PlueckerVector pl = pluecker(line);
  if (auto zero = pl.first_vanishing_entry()) {
    throw PreconditionError("L meets Delta_{n-2}: bracket " + describe(*zero) + " vanishes");
  }
  for (const auto& p : z.points()) {
    if (!line.contains(p)) throw PreconditionError("point " + describe(p) + " is not on L");
    if (p.nonzero_count() != p.size()) {
      throw PreconditionError("point " + describe(p) + " lies in Delta_{n-1} (has a zero coordinate)");
    }
  }

  LinSpace ambient(line_power_matrix(line, r));
  LinSpace previous_power(line_power_matrix(line, r - 1));
  std::vector<LinSpace> hyperplanes;
  for (const auto& p : z.points()) {
    // p has no zero coordinate, so the product keeps its dimension
    hyperplanes.push_back(*point_times_space(p, previous_power));
  }
  PointSet points(n);
  std::vector<IndexSet> sources;
  for (auto& lp : squarefree_products(z, r)) {
    points.insert(lp.point);
    sources.push_back(std::move(lp.factors));
  }
  return {std::move(ambient), std::move(hyperplanes), std::move(points), std::move(sources), r};
}

GeneralPositionReport verify_general_position(std::span<const LinSpace> hyperplanes, const LinSpace& ambient) {
  const std::size_t r = ambient.dim();
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    const auto& h = hyperplanes[i];
    if (h.ambient_dim() != ambient.ambient_dim()) throw DimensionError("hyperplane lives in a different P^n");
    if (h.dim() + 1 != r) {
      throw PreconditionError("H_" + std::to_string(i) + " has dimension " + std::to_string(h.dim()) +
                              ", expected " + std::to_string(r - 1));
    }
    if (!ambient.contains(h)) throw PreconditionError("H_" + std::to_string(i) + " is not contained in M");
  }
  GeneralPositionReport report;
  const std::size_t m = hyperplanes.size();
  for (std::size_t j = 1; j <= std::min(m, r + 1); ++j) {
    const int expected = static_cast<int>(r) - static_cast<int>(j);
    for (const auto& tuple : subsets(m, j)) {
      std::vector<LinSpace> chosen;
      for (std::size_t i : tuple) chosen.push_back(hyperplanes[i]);
      auto meet = intersect(chosen);
      int observed = meet ? static_cast<int>(meet->dim()) : -1;
      if (observed != expected) {
        return {false, tuple, observed, expected};
      }
    }
  }
  return report;
}

bool verify_star(const StarWitness& w) {
  if (w.ambient.dim() != w.r) return false;
  if (!verify_general_position(w.hyperplanes, w.ambient).ok) return false;
  PointSet intersections(w.ambient.ambient_dim());
  for (const auto& tuple : subsets(w.hyperplanes.size(), w.r)) {
    std::vector<LinSpace> chosen;
    for (std::size_t i : tuple) chosen.push_back(w.hyperplanes[i]);
    auto meet = intersect(chosen);
    if (!meet || meet->dim() != 0) return false;
    intersections.insert(meet->generator(0));
  }
  if (intersections.size() != static_cast<std::size_t>(binomial(w.hyperplanes.size(), w.r).get_ui())) return false;
  return intersections == w.points;
}

}  // namespace hadamard
