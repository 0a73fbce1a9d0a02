#include "hadamard/tropical.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "hadamard/errors.hpp"
#include "hadamard/fourier_motzkin.hpp"
#include "hadamard/int_matrix.hpp"

namespace hadamard {

namespace {

bool disjoint(const IndexSet& a, const IndexSet& b) {
  IndexSet common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

IndexSet merged(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool cones_disjoint(const SignedCone& a, const SignedCone& b) {
  return disjoint(a.plus, b.plus) && disjoint(a.plus, b.minus) && disjoint(a.minus, b.plus) &&
         disjoint(a.minus, b.minus);
}

// Signed generator vectors in R^{n+1}.
std::vector<QVector> generators(const SignedCone& c, std::size_t n) {
  std::vector<QVector> out;
  for (std::size_t i : c.plus) {
    QVector v(n + 1);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  for (std::size_t i : c.minus) {
    QVector v(n + 1);
    v[i] = -1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

void SignedConeFan::add(SignedCone cone, const Integer& multiplicity) {
  if (multiplicity == 0) return;
  if (multiplicity < 0) throw PreconditionError("fan multiplicities must be positive");
  std::sort(cone.plus.begin(), cone.plus.end());
  std::sort(cone.minus.begin(), cone.minus.end());
  if (cone.dim() != dim_) {
    throw PreconditionError("cone of dimension " + std::to_string(cone.dim()) + " in a fan of dimension " +
                            std::to_string(dim_));
  }
  if (!disjoint(cone.plus, cone.minus)) throw PreconditionError("cone uses an index both positively and negatively");
  for (const IndexSet* s : {&cone.plus, &cone.minus}) {
    for (std::size_t i : *s) {
      if (i > n_) throw PreconditionError("cone index out of range");
    }
  }
  cones_[std::move(cone)] += multiplicity;
}

SignedConeFan standard_tls(std::size_t m, std::size_t n) {
  if (m > n) {
    throw PreconditionError("standard tropical linear space needs m <= n (m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ")");
  }
  SignedConeFan fan(n, m);
  for (auto& s : subsets(n + 1, m)) fan.add({std::move(s), {}}, 1);
  return fan;
}

SignedConeFan negate_fan(const SignedConeFan& fan) {
  SignedConeFan out(fan.ambient_dim(), fan.dim(), fan.global_weight());
  for (const auto& [c, mult] : fan.cones()) out.add({c.minus, c.plus}, mult);
  return out;
}

Integer lattice_index(std::span<const SignedCone> cones, std::size_t n) {
  // Coordinates on Z^{n+1} / Z 1 = Z^n: e_i -> e_i (i < n), e_n -> -(1,...,1).
  std::size_t total = 0;
  for (const auto& c : cones) total += c.dim();
  if (total == 0) return 1;
  IntMatrix a(total, n);
  std::size_t row = 0;
  for (const auto& c : cones) {
    for (const auto& g : generators(c, n)) {
      for (std::size_t i = 0; i <= n; ++i) {
        if (g[i] == 0) continue;
        Integer s = g[i].get_num();
        if (i < n) {
          a(row, i) += s;
        } else {
          for (std::size_t k = 0; k < n; ++k) a(row, k) -= s;
        }
      }
      ++row;
    }
  }
  // Each signed coordinate cone's generators already form a basis of its
  // saturated lattice, so the row lattice is N_1 + ... + N_r.
  auto diag = smith_normal_form(a);
  Integer index = 1;
  std::size_t rank = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    index *= d;
    ++rank;
  }
  if (rank != total) throw PreconditionError("cone sum is not transversal");
  return index;
}

SignedConeFan minkowski_sum(std::span<const SignedConeFan> fans, const Integer& delta) {
  if (fans.empty()) throw PreconditionError("Minkowski sum of no fans");
  if (delta <= 0) throw PreconditionError("delta must be positive");
  const std::size_t n = fans.front().ambient_dim();
  std::size_t total_dim = 0;
  for (const auto& f : fans) {
    if (f.ambient_dim() != n) throw DimensionError("fans live in different ambient spaces");
    total_dim += f.dim();
  }
  if (total_dim > n) {
    throw PreconditionError("Minkowski sum dimension " + std::to_string(total_dim) + " exceeds n=" +
                            std::to_string(n));
  }
  // Folding pairwise is the same sum over ordered tuples: for transversal
  // sums the lattice index is multiplicative.
  SignedConeFan acc = fans.front();
  for (std::size_t k = 1; k < fans.size(); ++k) {
    const SignedConeFan& next = fans[k];
    SignedConeFan sum(n, acc.dim() + next.dim(), acc.global_weight() * next.global_weight());
    for (const auto& [a, ma] : acc.cones()) {
      for (const auto& [b, mb] : next.cones()) {
        if (!cones_disjoint(a, b)) continue;
        const SignedCone pair[] = {a, b};
        sum.add({merged(a.plus, b.plus), merged(a.minus, b.minus)}, ma * mb * lattice_index(pair, n));
      }
    }
    acc = std::move(sum);
  }
  SignedConeFan out(n, acc.dim(), acc.global_weight() / Rational(delta));
  for (const auto& [c, m] : acc.cones()) out.add(c, m);
  return out;
}

bool is_balanced(const SignedConeFan& fan) {
  if (fan.dim() == 0) return true;
  const std::size_t n = fan.ambient_dim();
  // ridge -> weighted sum of primitive directions of the facets around it
  std::map<SignedCone, QVector> sums;
  for (const auto& [c, mult] : fan.cones()) {
    for (bool from_plus : {true, false}) {
      const IndexSet& side = from_plus ? c.plus : c.minus;
      for (std::size_t k = 0; k < side.size(); ++k) {
        SignedCone ridge = c;
        IndexSet& shrink = from_plus ? ridge.plus : ridge.minus;
        shrink.erase(shrink.begin() + static_cast<std::ptrdiff_t>(k));
        auto [it, inserted] = sums.try_emplace(ridge, QVector(n + 1));
        it->second[side[k]] += from_plus ? Rational(mult) : Rational(-mult);
      }
    }
  }
  for (const auto& [ridge, w] : sums) {
    // w must lie in span(e_j : j in ridge) + R 1: constant off the ridge.
    IndexSet support = merged(ridge.plus, ridge.minus);
    std::optional<Rational> value;
    for (std::size_t i = 0; i <= n; ++i) {
      if (std::binary_search(support.begin(), support.end(), i)) continue;
      if (!value) {
        value = w[i];
      } else if (*value != w[i]) {
        return false;
      }
    }
  }
  return true;
}

namespace {

enum class PairStatus { kEmpty, kContributes };

// Decides sigma1 ∩ (sigma2 + v) in R^{n+1}/R1: find lambda, mu >= 0 and t
// with sum lambda_i g_i - sum mu_j h_j - t 1 = v.
PairStatus classify_pair(const SignedCone& s1, const SignedCone& s2, const QVector& v, std::size_t n) {
  // Coordinate shortcuts. sign[i] is the sign of e_i among the generators of
  // sigma1 - sigma2 (0: absent, 2: appears more than once).
  std::vector<int> sign(n + 1, 0);
  auto mark = [&](const IndexSet& idx, int s) {
    for (std::size_t i : idx) sign[i] = sign[i] == 0 ? s : 2;
  };
  mark(s1.plus, 1);
  mark(s1.minus, -1);
  mark(s2.plus, -1);
  mark(s2.minus, 1);
  std::vector<std::size_t> absent;
  bool repeated = false;
  for (std::size_t i = 0; i <= n; ++i) {
    if (sign[i] == 0) absent.push_back(i);
    if (sign[i] == 2) repeated = true;
  }
  // The generators and 1 span {x : x constant off the support}.
  for (std::size_t k = 1; k < absent.size(); ++k) {
    if (v[absent[k]] != v[absent[0]]) return PairStatus::kEmpty;
  }
  if (!repeated && absent.size() == 1) {
    // n distinct coordinate directions: the unique solution has t = -v_j and
    // coefficient sign_i (v_i - v_j) on e_i.
    const Rational& vj = v[absent[0]];
    bool strict = true;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == absent[0]) continue;
      int s = sgn(Rational(v[i] - vj)) * sign[i];
      if (s < 0) return PairStatus::kEmpty;
      if (s == 0) strict = false;
    }
    if (!strict) throw PreconditionError("displacement vector is not generic: it meets the boundary of a cone pair");
    return PairStatus::kContributes;
  }

  auto g1 = generators(s1, n);
  auto g2 = generators(s2, n);
  const std::size_t k1 = g1.size(), k2 = g2.size();
  const std::size_t vars = k1 + k2 + 1;
  auto build = [&](Relation sign_relation) {
    std::vector<LinearConstraint> sys;
    for (std::size_t i = 0; i <= n; ++i) {
      LinearConstraint c;
      c.coeffs.assign(vars, Rational(0));
      for (std::size_t a = 0; a < k1; ++a) c.coeffs[a] = g1[a][i];
      for (std::size_t b = 0; b < k2; ++b) c.coeffs[k1 + b] = -g2[b][i];
      c.coeffs[vars - 1] = -1;
      c.relation = Relation::kEqual;
      c.rhs = v[i];
      sys.push_back(std::move(c));
    }
    for (std::size_t a = 0; a < k1 + k2; ++a) {
      LinearConstraint c;  // -x_a (rel) 0
      c.coeffs.assign(vars, Rational(0));
      c.coeffs[a] = -1;
      c.relation = sign_relation;
      c.rhs = 0;
      sys.push_back(std::move(c));
    }
    return sys;
  };
  if (!feasible(build(Relation::kLessEqual), vars)) return PairStatus::kEmpty;
  const SignedCone both[] = {s1, s2};
  bool transversal = cones_disjoint(s1, s2);
  if (transversal) {
    try {
      lattice_index(both, n);
    } catch (const PreconditionError&) {
      transversal = false;
    }
  }
  if (!transversal || !feasible(build(Relation::kLess), vars)) {
    throw PreconditionError("displacement vector is not generic: it meets the boundary of a cone pair");
  }
  return PairStatus::kContributes;
}

}  // namespace

StableIntersection stable_mult_origin(const SignedConeFan& f, const SignedConeFan& g, const QVector& v) {
  const std::size_t n = f.ambient_dim();
  if (g.ambient_dim() != n) throw DimensionError("fans live in different ambient spaces");
  if (v.size() != n + 1) throw DimensionError("displacement vector has the wrong length");
  if (f.dim() + g.dim() != n) {
    throw PreconditionError("stable intersection at the origin needs complementary dimensions (" +
                            std::to_string(f.dim()) + " + " + std::to_string(g.dim()) + " != " +
                            std::to_string(n) + ")");
  }
  StableIntersection out;
  out.displacement = v;
  Integer total = 0;
  for (const auto& [s1, m1] : f.cones()) {
    for (const auto& [s2, m2] : g.cones()) {
      if (classify_pair(s1, s2, v, n) == PairStatus::kEmpty) continue;
      const SignedCone both[] = {s1, s2};
      Integer index = lattice_index(both, n);
      total += m1 * m2 * index;
      out.pairs.push_back({s1, s2, m1, m2, index});
    }
  }
  out.multiplicity = f.global_weight() * g.global_weight() * Rational(total);
  return out;
}

QVector random_displacement(std::size_t n, Rng& rng) {
  static constexpr long kPrimes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                                     151, 157, 163, 167, 173, 179, 181, 191, 193, 197};
  QVector v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    bool distinct = false;
    while (!distinct) {
      long p = kPrimes[rng.uniform(0, std::size(kPrimes) - 1)];
      v[i] = make_rational(rng.uniform(-Rng::kCoefficientBound, Rng::kCoefficientBound), p);
      distinct = std::none_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i),
                              [&](const Rational& w) { return w == v[i]; });
    }
  }
  return v;
}

StableIntersection stable_mult_origin(const SignedConeFan& f, const SignedConeFan& g, std::uint64_t seed) {
  Rng rng(seed);
  constexpr int kAttempts = 16;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    QVector v = random_displacement(f.ambient_dim(), rng);
    try {
      return stable_mult_origin(f, g, v);
    } catch (const PreconditionError& e) {
      if (std::string(e.what()).find("not generic") == std::string::npos) throw;
    }
  }
  throw BudgetExhausted("no generic displacement vector found");
}

namespace {

struct ShapeTotals {
  std::size_t dim = 0;
  Integer multinomial_value = 1;
  Integer symmetry = 1;  // prod r_k!
  Integer span_product = 1;
};

ShapeTotals totals(const ProductShape& shape) {
  ShapeTotals t;
  std::vector<std::size_t> parts;
  for (const auto& [m, r] : shape) {
    if (r == 0) throw PreconditionError("multiplicities must be at least 1");
    for (std::size_t k = 0; k < r; ++k) parts.push_back(m);
    t.dim += m * r;
    t.symmetry *= factorial(r);
    t.span_product *= binomial(m + r, r);
  }
  t.multinomial_value = multinomial(parts);
  return t;
}

}  // namespace

DegreeResult degree_linear_products(const ProductShape& plain, std::size_t n) {
  ShapeTotals t = totals(plain);
  DegreeResult out;
  out.dimension = t.dim;
  out.degree = make_rational(t.multinomial_value, t.symmetry);
  out.below_bound = Integer(static_cast<unsigned long>(n)) < t.span_product - 1;
  return out;
}

DegreeResult degree_with_reciprocals(const ProductShape& plain, const ProductShape& reciprocal, std::size_t n) {
  ShapeTotals p = totals(plain);
  ShapeTotals q = totals(reciprocal);
  if (p.dim + q.dim > n) {
    throw PreconditionError("need m + m~ <= n (m=" + std::to_string(p.dim) + ", m~=" + std::to_string(q.dim) +
                            ", n=" + std::to_string(n) + ")");
  }
  DegreeResult out;
  out.dimension = p.dim + q.dim;
  out.degree = Rational(binomial(n - p.dim, q.dim)) * make_rational(p.multinomial_value, p.symmetry) *
               make_rational(q.multinomial_value, q.symmetry);
  out.below_bound = Integer(static_cast<unsigned long>(n)) < p.span_product * q.span_product - 1;
  return out;
}

FanDegreeTranscript fan_degree(const ProductShape& plain, const ProductShape& reciprocal, std::size_t n,
                               std::uint64_t seed) {
  FanDegreeTranscript out;
  out.delta = 1;
  std::size_t dim = 0;
  for (const auto& [m, r] : plain) {
    for (std::size_t k = 0; k < r; ++k) out.factors.push_back(standard_tls(m, n));
    out.delta *= factorial(r);
    dim += m * r;
  }
  for (const auto& [m, s] : reciprocal) {
    for (std::size_t k = 0; k < s; ++k) out.factors.push_back(negate_fan(standard_tls(m, n)));
    out.delta *= factorial(s);
    dim += m * s;
  }
  if (out.factors.empty()) throw PreconditionError("degree of an empty product");
  if (dim > n) throw PreconditionError("product dimension " + std::to_string(dim) + " exceeds n=" + std::to_string(n));
  out.sum = minkowski_sum(out.factors, out.delta);
  out.complement = standard_tls(n - dim, n);
  out.intersection = stable_mult_origin(out.sum, out.complement, seed);
  return out;
}

}  // namespace hadamard
