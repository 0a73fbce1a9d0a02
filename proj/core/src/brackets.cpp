#include "hadamard/brackets.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hadamard/combinatorics.hpp"
#include "hadamard/errors.hpp"

namespace hadamard {

SparsePoly BracketExpr::evaluate_brackets(std::span<const Rational> values) const {
  if (values.size() != first_coordinate) throw DimensionError("wrong number of bracket values");
  const std::size_t coords = coordinate_count();
  std::vector<SparsePoly> images;
  images.reserve(poly.variable_count());
  for (const auto& v : values) images.push_back(SparsePoly::constant(coords, v));
  for (std::size_t i = 0; i < coords; ++i) images.push_back(SparsePoly::variable(coords, i));
  return poly.substitute(images);
}

std::string BracketExpr::to_string() const {
  // Group by coordinate monomial, highest (x0^d) first.
  std::map<Exponent, std::vector<std::pair<Exponent, Rational>>, std::greater<>> groups;
  for (const auto& [e, c] : poly.terms()) {
    Exponent head(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(first_coordinate));
    Exponent tail(e.begin() + static_cast<std::ptrdiff_t>(first_coordinate), e.end());
    groups[tail].emplace_back(std::move(head), c);
  }
  std::string out;
  for (const auto& [tail, terms] : groups) {
    for (const auto& [head, c] : terms) {
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      Rational mag = abs(c);
      bool first_factor = true;
      if (mag != 1) {
        out += hadamard::to_string(mag);
        first_factor = false;
      }
      for (std::size_t k = 0; k < head.size(); ++k) {
        for (unsigned p = 0; p < head[k]; ++p) {
          out += names[k];
          first_factor = false;
        }
      }
      for (std::size_t i = 0; i < tail.size(); ++i) {
        if (tail[i] == 0) continue;
        if (!first_factor) out += "*";
        out += "x" + std::to_string(i);
        if (tail[i] > 1) out += "^" + std::to_string(tail[i]);
        first_factor = false;
      }
      if (first_factor) out += "1";
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

std::string digits(const IndexSet& s) {
  std::string out;
  for (std::size_t i : s) out += std::to_string(i);
  return out;
}

struct QuadricVars {
  static constexpr std::size_t kVars = 16;
  std::map<IndexSet, std::size_t> pair_index;

  QuadricVars() {
    std::size_t k = 0;
    for (auto& s : subsets(4, 2)) pair_index.emplace(std::move(s), k++);
  }
  SparsePoly l(std::size_t i, std::size_t j) const {
    return SparsePoly::variable(kVars, pair_index.at({i, j}));
  }
  SparsePoly m(std::size_t i, std::size_t j) const {
    return SparsePoly::variable(kVars, 6 + pair_index.at({i, j}));
  }
  SparsePoly x(std::size_t i) const { return SparsePoly::variable(kVars, 12 + i); }
};

BracketExpr build_quadric() {
  const QuadricVars v;
  auto s = [&](std::size_t i, std::size_t j) { return v.l(i, j); };
  auto t = [&](std::size_t i, std::size_t j) { return v.m(i, j); };
  auto x = [&](std::size_t i) { return v.x(i); };

  SparsePoly q(QuadricVars::kVars);
  q += s(1, 2) * s(1, 3) * s(2, 3) * t(1, 2) * t(1, 3) * t(2, 3) * x(0) * x(0);
  q += s(0, 2) * s(0, 3) * s(2, 3) * t(0, 2) * t(0, 3) * t(2, 3) * x(1) * x(1);
  q += s(0, 1) * s(0, 3) * s(1, 3) * t(0, 1) * t(0, 3) * t(1, 3) * x(2) * x(2);
  q += s(0, 1) * s(0, 2) * s(1, 2) * t(0, 1) * t(0, 2) * t(1, 2) * x(3) * x(3);

  // Mixed terms: x_i x_j pairs with the complementary bracket {k,l} and the
  // two "crossing" products that avoid it.
  const SparsePoly a = s(0, 2) * s(1, 3) * t(0, 3) * t(1, 2) + s(0, 3) * s(1, 2) * t(0, 2) * t(1, 3);
  const SparsePoly b = s(0, 1) * s(2, 3) * t(0, 3) * t(1, 2) + s(0, 3) * s(1, 2) * t(0, 1) * t(2, 3);
  const SparsePoly c = s(0, 1) * s(2, 3) * t(0, 2) * t(1, 3) + s(0, 2) * s(1, 3) * t(0, 1) * t(2, 3);
  q -= s(2, 3) * t(2, 3) * a * x(0) * x(1);
  q += s(1, 3) * t(1, 3) * b * x(0) * x(2);
  q -= s(1, 2) * t(1, 2) * c * x(0) * x(3);
  q -= s(0, 3) * t(0, 3) * c * x(1) * x(2);
  q += s(0, 2) * t(0, 2) * b * x(1) * x(3);
  q -= s(0, 1) * t(0, 1) * a * x(2) * x(3);

  BracketExpr out;
  out.poly = std::move(q);
  out.first_coordinate = 12;
  out.names.resize(12);
  for (const auto& [set, k] : v.pair_index) {
    out.names[k] = "[" + digits(set) + "]";
    out.names[6 + k] = "{" + digits(set) + "}";
  }
  return out;
}

constexpr std::size_t kCubicBrackets = 20;
constexpr std::size_t kCubicVars = kCubicBrackets + 6;

using Triple = std::array<std::size_t, 3>;
using Term = std::vector<Triple>;

const std::map<IndexSet, std::size_t>& triple_index() {
  static const std::map<IndexSet, std::size_t> index = [] {
    std::map<IndexSet, std::size_t> out;
    std::size_t k = 0;
    for (auto& s : subsets(6, 3)) out.emplace(std::move(s), k++);
    return out;
  }();
  return index;
}

// Orbit representatives for x0^3, x0^2 x1 and x0 x1 x2. Brackets are
// unsigned: [ijk] always means the entry at the sorted index set.
struct Representative {
  Triple pattern;
  std::vector<Term> terms;
};

std::vector<Representative> representatives() {
  const Term shared = {{2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}};
  auto with_shared = [&](Term t) {
    t.insert(t.end(), shared.begin(), shared.end());
    return t;
  };
  return {
      {{0, 0, 0},
       {{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5},
         {3, 4, 5}}}},
      {{0, 0, 1},
       {with_shared({{0, 2, 3}, {0, 4, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}}),
        with_shared({{0, 2, 4}, {0, 3, 5}, {1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5}}),
        with_shared({{0, 2, 5}, {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5}})}},
      // One term per bijection between the pairs of {0,1,2} and {3,4,5}.
      {{0, 1, 2},
       {{{0, 1, 3}, {0, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {0, 3, 5}, {2, 3, 5}, {0, 4, 5}, {1, 4, 5}, {3, 4, 5}},
        {{0, 1, 3}, {1, 2, 4}, {0, 3, 4}, {2, 3, 4}, {0, 2, 5}, {1, 3, 5}, {2, 3, 5}, {0, 4, 5}, {1, 4, 5}, {3, 4, 5}},
        {{0, 2, 3}, {0, 1, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {0, 3, 5}, {1, 3, 5}, {0, 4, 5}, {2, 4, 5}, {3, 4, 5}},
        {{0, 2, 3}, {1, 2, 4}, {0, 3, 4}, {1, 3, 4}, {0, 1, 5}, {1, 3, 5}, {2, 3, 5}, {0, 4, 5}, {2, 4, 5}, {3, 4, 5}},
        {{1, 2, 3}, {0, 1, 4}, {0, 3, 4}, {2, 3, 4}, {0, 2, 5}, {0, 3, 5}, {1, 3, 5}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}},
        {{1, 2, 3}, {0, 2, 4}, {0, 1, 5}, {0, 3, 4}, {1, 3, 4}, {0, 3, 5}, {2, 3, 5}, {1, 4, 5}, {2, 4, 5},
         {3, 4, 5}}}},
  };
}

// Bracket-variable exponent of sum_terms prod_brackets [sigma(bracket)].
SparsePoly transport(const Representative& rep, const std::array<std::size_t, 6>& sigma) {
  SparsePoly out(kCubicBrackets);
  for (const auto& term : rep.terms) {
    Exponent e(kCubicBrackets, 0);
    for (const auto& br : term) {
      IndexSet moved = {sigma[br[0]], sigma[br[1]], sigma[br[2]]};
      std::sort(moved.begin(), moved.end());
      ++e[triple_index().at(moved)];
    }
    out.add_term(e, 1);
  }
  return out;
}

Exponent target_of(const Triple& pattern, const std::array<std::size_t, 6>& sigma) {
  Exponent e(6, 0);
  for (std::size_t i : pattern) ++e[sigma[i]];
  return e;
}

// Coefficient (in the bracket variables) of every cubic monomial, plus the
// number of permutations that disagree with the first one seen.
struct CubicCoefficients {
  std::map<Exponent, SparsePoly> coefficient;
  std::size_t inconsistencies = 0;
};

CubicCoefficients cubic_coefficients() {
  CubicCoefficients out;
  const auto reps = representatives();
  std::array<std::size_t, 6> sigma;
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    for (const auto& rep : reps) {
      Exponent target = target_of(rep.pattern, sigma);
      std::size_t weight = 0;
      for (std::size_t i = 0; i < 6; ++i) weight += target[i] * i;
      SparsePoly value = transport(rep, sigma) * Rational(weight % 2 == 0 ? -1 : 1);
      auto [it, inserted] = out.coefficient.try_emplace(target, value);
      if (!inserted && it->second != value) ++out.inconsistencies;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

BracketExpr build_cubic() {
  CubicCoefficients coeffs = cubic_coefficients();
  if (coeffs.inconsistencies != 0) {
    throw std::logic_error("cubic orbit action is not well defined (" + std::to_string(coeffs.inconsistencies) +
                           " disagreements)");
  }
  BracketExpr out;
  out.first_coordinate = kCubicBrackets;
  out.poly = SparsePoly(kCubicVars);
  for (const auto& [x_exp, c] : coeffs.coefficient) {
    for (const auto& [b_exp, value] : c.terms()) {
      Exponent e = b_exp;
      e.insert(e.end(), x_exp.begin(), x_exp.end());
      out.poly.add_term(e, value);
    }
  }
  out.names.resize(kCubicBrackets);
  for (const auto& [set, k] : triple_index()) out.names[k] = "[" + digits(set) + "]";
  return out;
}

void require_shape(const PlueckerVector& pl, std::size_t n, std::size_t m, const char* what) {
  if (pl.ambient_dim() != n || pl.dim() != m) {
    throw DimensionError(std::string(what) + " must be a " + std::to_string(m) + "-plane in P^" + std::to_string(n) +
                         ", got dim " + std::to_string(pl.dim()) + " in P^" + std::to_string(pl.ambient_dim()));
  }
}

std::vector<Rational> sorted_entries(const PlueckerVector& pl) {
  std::vector<Rational> out;
  for (const auto& [set, v] : pl.entries()) out.push_back(v);
  return out;
}

}  // namespace

const BracketExpr& quadric_bracket_expr() {
  static const BracketExpr expr = build_quadric();
  return expr;
}

const BracketExpr& cubic_bracket_expr() {
  static const BracketExpr expr = build_cubic();
  return expr;
}

std::size_t cubic_orbit_inconsistencies() { return cubic_coefficients().inconsistencies; }

SparsePoly quadric_two_lines(const PlueckerVector& l, const PlueckerVector& m) {
  require_shape(l, 3, 1, "first argument");
  require_shape(m, 3, 1, "second argument");
  std::vector<Rational> values = sorted_entries(l);
  auto rest = sorted_entries(m);
  values.insert(values.end(), rest.begin(), rest.end());
  return quadric_bracket_expr().evaluate_brackets(values);
}

SparsePoly cubic_plane_square(const PlueckerVector& plane) {
  require_shape(plane, 5, 2, "plane");
  return cubic_bracket_expr().evaluate_brackets(sorted_entries(plane));
}

bool verify_identity(const SparsePoly& form, const VarietySampler& sampler, std::size_t trials, std::uint64_t seed) {
  if (form.is_zero()) return true;
  if (form.variable_count() != sampler.ambient_dim() + 1) {
    throw DimensionError("form has " + std::to_string(form.variable_count()) + " variables, sampler lives in P^" +
                         std::to_string(sampler.ambient_dim()));
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    if (form.evaluate(sampler.point(rng).coords()) != 0) return false;
  }
  return true;
}

bool verify_identity_symbolic(const SparsePoly& form, std::span<const SparsePoly> images) {
  if (form.is_zero()) return true;
  return form.substitute(images).is_zero();
}

std::vector<SparsePoly> product_parametrization(const LinSpace& a, const LinSpace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("spaces live in different ambient spaces");
  const std::size_t ka = a.dim() + 1, kb = b.dim() + 1;
  const std::size_t vars = ka + kb;
  std::vector<SparsePoly> out;
  for (std::size_t i = 0; i <= a.ambient_dim(); ++i) {
    SparsePoly u(vars), w(vars);
    for (std::size_t k = 0; k < ka; ++k) u += SparsePoly::variable(vars, k) * a.generators()(k, i);
    for (std::size_t k = 0; k < kb; ++k) w += SparsePoly::variable(vars, ka + k) * b.generators()(k, i);
    out.push_back(u * w);
  }
  return out;
}

SparsePoly quadric_generic_expansion() {
  constexpr std::size_t kVars = 20;
  auto a = [](std::size_t row, std::size_t col) { return SparsePoly::variable(kVars, 4 * row + col); };
  auto b = [](std::size_t row, std::size_t col) { return SparsePoly::variable(kVars, 8 + 4 * row + col); };
  auto lambda = [](std::size_t k) { return SparsePoly::variable(kVars, 16 + k); };
  auto mu = [](std::size_t k) { return SparsePoly::variable(kVars, 18 + k); };

  std::vector<SparsePoly> images(16, SparsePoly(kVars));
  for (const auto& set : subsets(4, 2)) {
    const std::size_t i = set[0], j = set[1];
    std::size_t k = 0;
    for (const auto& s : subsets(4, 2)) {
      if (s == set) break;
      ++k;
    }
    images[k] = a(0, i) * a(1, j) - a(0, j) * a(1, i);
    images[6 + k] = b(0, i) * b(1, j) - b(0, j) * b(1, i);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    images[12 + i] = (lambda(0) * a(0, i) + lambda(1) * a(1, i)) * (mu(0) * b(0, i) + mu(1) * b(1, i));
  }
  return quadric_bracket_expr().poly.substitute(images);
}

}  // namespace hadamard
