#include <gtest/gtest.h>

#include "hadamard/brackets.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/line_powers.hpp"
#include "hadamard/products.hpp"
#include "oracles.hpp"

using namespace hadamard;

namespace {

PPoint pt(std::initializer_list<long> c) {
  QVector v;
  for (long x : c) v.emplace_back(x);
  return PPoint(std::move(v));
}

LinSpace line_l() { return line_through(pt({2, 3, 5, 7}), pt({11, 13, 17, 19})); }
LinSpace line_m() { return line_through(pt({23, 29, 31, 37}), pt({41, 43, 47, 53})); }

LinSpace sample_plane() {
  return LinSpace(QMatrix{{3, 1, 4, 1, 5, 9}, {2, 6, 5, 3, 5, 8}, {9, 7, 9, 3, 2, 3}});
}

}  // namespace

TEST(Quadric, MatchesPrintedCoefficients) {
  SparsePoly q = quadric_two_lines(pluecker(line_l()), pluecker(line_m()));
  SparsePoly known(4);
  known.add_term({2, 0, 0, 0}, 88128);
  known.add_term({1, 1, 0, 0}, -89280);
  known.add_term({0, 2, 0, 0}, -5299632);
  known.add_term({1, 0, 1, 0}, -817938);
  known.add_term({0, 1, 1, 0}, 8896641);
  known.add_term({0, 0, 2, 0}, -1481805);
  known.add_term({1, 0, 0, 1}, -321510);
  known.add_term({0, 1, 0, 1}, -1777545);
  known.add_term({0, 0, 1, 1}, -54250);
  known.add_term({0, 0, 0, 2}, 116375);
  auto ratio = proportionality(q, known);
  ASSERT_TRUE(ratio);
  EXPECT_NE(*ratio, 0);
}

TEST(Quadric, VanishesOnProducts) {
  SparsePoly q = quadric_two_lines(pluecker(line_l()), pluecker(line_m()));
  auto sampler = VarietySampler::product(VarietySampler::linear(line_l()), VarietySampler::linear(line_m()));
  EXPECT_TRUE(verify_identity(q, sampler, 50, 1));
  SparsePoly perturbed = q;
  perturbed.add_term({1, 1, 0, 0}, 1);
  EXPECT_FALSE(verify_identity(perturbed, sampler, 3, 2));
  EXPECT_TRUE(verify_identity(SparsePoly(4), sampler, 5, 3));
  EXPECT_THROW(verify_identity(SparsePoly::variable(3, 0), sampler, 1, 4), DimensionError);
}

TEST(Quadric, SameLineGivesSquaredHyperplane) {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    PlueckerVector pl = pluecker(oracle::random_generic_line(3, rng));
    auto ratio = proportionality(quadric_two_lines(pl, pl), power_hyperplane(pl).pow(2));
    ASSERT_TRUE(ratio);
    EXPECT_NE(*ratio, 0);
  }
}

TEST(Quadric, BracketDegrees) {
  const BracketExpr& e = quadric_bracket_expr();
  EXPECT_EQ(e.first_coordinate, 12u);
  EXPECT_EQ(e.coordinate_count(), 4u);
  for (const auto& [exp, c] : e.poly.terms()) {
    unsigned l = 0, m = 0, x = 0;
    for (std::size_t k = 0; k < 6; ++k) l += exp[k];
    for (std::size_t k = 6; k < 12; ++k) m += exp[k];
    for (std::size_t k = 12; k < 16; ++k) x += exp[k];
    EXPECT_EQ(l, 3u);
    EXPECT_EQ(m, 3u);
    EXPECT_EQ(x, 2u);
  }
  EXPECT_NE(e.to_string().find("[12][13][23]{12}{13}{23}*x0^2"), std::string::npos);
}

TEST(Quadric, SymbolicIdentity) {
  EXPECT_TRUE(quadric_generic_expansion().is_zero());
  SparsePoly q = quadric_two_lines(pluecker(line_l()), pluecker(line_m()));
  auto images = product_parametrization(line_l(), line_m());
  EXPECT_EQ(images.front().variable_count(), 4u);
  EXPECT_TRUE(verify_identity_symbolic(q, images));
  SparsePoly perturbed = q;
  perturbed.add_term({0, 0, 0, 2}, 1);
  EXPECT_FALSE(verify_identity_symbolic(perturbed, images));
}

TEST(Quadric, RejectsWrongShapes) {
  PlueckerVector plane = pluecker(LinSpace(QMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_THROW(quadric_two_lines(plane, pluecker(line_m())), DimensionError);
  EXPECT_THROW(cubic_plane_square(pluecker(line_l())), DimensionError);
}

TEST(Cubic, OrbitActionIsWellDefined) {
  EXPECT_EQ(cubic_orbit_inconsistencies(), 0u);
  const BracketExpr& e = cubic_bracket_expr();
  std::set<Exponent> monomials;
  for (const auto& [exp, c] : e.poly.terms()) {
    unsigned b = 0, x = 0;
    for (std::size_t k = 0; k < 20; ++k) b += exp[k];
    for (std::size_t k = 20; k < 26; ++k) x += exp[k];
    EXPECT_EQ(b, 10u);
    EXPECT_EQ(x, 3u);
    monomials.insert(Exponent(exp.begin() + 20, exp.end()));
  }
  EXPECT_EQ(monomials.size(), 56u);
}

TEST(Cubic, LeadingCoefficient) {
  PlueckerVector pl = pluecker(sample_plane());
  SparsePoly c = cubic_plane_square(pl);
  Rational expect = -1;
  for (const auto& s : subsets(6, 3)) {
    if (s[0] != 0) expect *= pl.entries().at(s);
  }
  EXPECT_EQ(c.coefficient({3, 0, 0, 0, 0, 0}), expect);
}

TEST(Cubic, VanishesOnSquareAndMatchesInterpolation) {
  LinSpace plane = sample_plane();
  SparsePoly c = cubic_plane_square(pluecker(plane));
  auto sq = VarietySampler::power(VarietySampler::linear(plane), 2);
  EXPECT_TRUE(verify_identity(c, sq, 30, 5));
  Hypersurface h = interpolate_hypersurface(sq, 3, 6);
  EXPECT_EQ(h.degree, 3u);
  EXPECT_TRUE(proportionality(c, h.form));
  auto images = product_parametrization(plane, plane);
  EXPECT_TRUE(verify_identity_symbolic(c, images));
}

TEST(Cubic, SpecializesToSquaredLine) {
  // P = L^{*2} for a line L in P^5: the cubic vanishes on P * P = L^{*4}.
  Rng rng(7);
  LinSpace l = oracle::random_generic_line(5, rng);
  LinSpace p(line_power_matrix(l, 2));
  SparsePoly c = cubic_plane_square(pluecker(p));
  EXPECT_TRUE(verify_identity(c, VarietySampler::power(VarietySampler::linear(p), 2), 20, 8));
  EXPECT_TRUE(verify_identity(c, VarietySampler::power(VarietySampler::linear(l), 4), 20, 9));
}

TEST(BracketExpr, EvaluationCommutesWithArithmetic) {
  const BracketExpr& e = quadric_bracket_expr();
  Rng rng(10);
  for (int t = 0; t < 5; ++t) {
    PlueckerVector a = pluecker(oracle::random_space(1, 3, rng)), b = pluecker(oracle::random_space(1, 3, rng));
    QVector values;
    for (const auto& [s, v] : a.entries()) values.push_back(v);
    for (const auto& [s, v] : b.entries()) values.push_back(v);
    BracketExpr doubled = e;
    doubled.poly = e.poly * e.poly;
    EXPECT_EQ(doubled.evaluate_brackets(values), e.evaluate_brackets(values) * e.evaluate_brackets(values));
  }
}
