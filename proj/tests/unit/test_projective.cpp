#include <gtest/gtest.h>

#include "hadamard/errors.hpp"
#include "hadamard/projective.hpp"
#include "oracles.hpp"

using namespace hadamard;

namespace {

PPoint pt(std::initializer_list<long> c) {
  QVector v;
  for (long x : c) v.emplace_back(x);
  return PPoint(std::move(v));
}

}  // namespace

TEST(PPoint, RejectsZeroAndEmpty) {
  EXPECT_THROW(pt({0, 0, 0}), PreconditionError);
  EXPECT_THROW(PPoint(QVector{}), PreconditionError);
}

TEST(PPoint, ProjectiveEquality) {
  EXPECT_EQ(pt({1, 2, 3}), pt({-2, -4, -6}));
  EXPECT_NE(pt({1, 2, 3}), pt({1, 2, 4}));
  EXPECT_NE(pt({1, 0}), pt({0, 1}));
  EXPECT_EQ(pt({0, 3, -6}).normalized().coords(), (QVector{0, 1, -2}));
}

TEST(HadamardPoint, Examples) {
  EXPECT_EQ(*hadamard_point(pt({2, 3, 5, 7}), pt({11, 13, 17, 19})), pt({22, 39, 85, 133}));
  EXPECT_EQ(*hadamard_point(pt({1, 1, 1, 1}), pt({4, 0, 2, 1})), pt({4, 0, 2, 1}));
  EXPECT_FALSE(hadamard_point(pt({1, 0}), pt({0, 1})));
  EXPECT_THROW(hadamard_point(pt({1, 0}), pt({1, 1, 1})), DimensionError);
}

TEST(DeltaIndex, Examples) {
  EXPECT_EQ(delta_index(pt({0, 0, 0, 1})), 0u);
  EXPECT_EQ(delta_index(pt({1, 0, 0, 1})), 1u);
  EXPECT_EQ(delta_index(pt({1, 1, 1, 1})), 3u);
}

TEST(HadamardPoint, Associative) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    PPoint p(oracle::random_vector(5, rng, 4)), q(oracle::random_vector(5, rng, 4)), z(oracle::random_vector(5, rng, 4));
    auto pq = hadamard_point(p, q);
    auto qz = hadamard_point(q, z);
    if (!pq || !qz) continue;
    auto left = hadamard_point(*pq, z);
    auto right = hadamard_point(p, *qz);
    ASSERT_EQ(left.has_value(), right.has_value());
    if (left) EXPECT_EQ(*left, *right);
  }
}

TEST(HadamardPoint, ZeroCountBound) {
  Rng rng(2);
  const std::size_t n = 9, i = 3;  // at most i - 1 zeros per factor
  for (int t = 0; t < 50; ++t) {
    std::size_t r = rng.uniform(1, 3);
    std::vector<PPoint> factors;
    for (std::size_t k = 0; k < r; ++k) {
      QVector v(n + 1, Rational(1));
      for (std::size_t z = 0; z < i - 1; ++z) v[rng.uniform(0, n)] = 0;
      for (auto& x : v) x *= rng.uniform(1, 9);
      factors.emplace_back(v);
    }
    PPoint acc = factors[0];
    for (std::size_t k = 1; k < r; ++k) acc = *hadamard_point(acc, factors[k]);
    EXPECT_LE(acc.size() - acc.nonzero_count(), r * i - r);
  }
}

TEST(LinSpace, MembershipEquationsAndEquality) {
  LinSpace l = line_through(pt({1, 1, 1}), pt({1, 2, 3}));
  EXPECT_TRUE(l.contains(pt({2, 3, 4})));
  EXPECT_FALSE(l.contains(pt({1, 0, 0})));
  QMatrix eq = l.equations();
  EXPECT_EQ(eq.rows(), 1u);
  EXPECT_EQ(*LinSpace::from_equations(eq), l);
  EXPECT_EQ(l, LinSpace(QMatrix{{2, 3, 4}, {0, 1, 2}}));
  EXPECT_THROW(LinSpace(QMatrix{{1, 2, 3}, {2, 4, 6}}), PreconditionError);
  EXPECT_FALSE(LinSpace::span_of(QMatrix{{0, 0}}));
  EXPECT_EQ(LinSpace::whole(2).dim(), 2u);
}

TEST(LinSpace, Intersection) {
  LinSpace a(QMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  LinSpace b(QMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  LinSpace both[] = {a, b};
  auto c = intersect(both);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, LinSpace(QMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}}));
  LinSpace p = LinSpace::point(pt({1, 0, 0, 0}));
  LinSpace q = LinSpace::point(pt({0, 0, 0, 1}));
  LinSpace disjoint[] = {p, q};
  EXPECT_FALSE(intersect(disjoint));
}

TEST(PointTimesSpace, Examples) {
  LinSpace l = line_through(pt({1, 1, 1}), pt({1, 2, 3}));
  EXPECT_EQ(*point_times_space(pt({1, 1, 1}), l), l);

  // hyperplane sum alpha_i x_i = 0 scaled by p -> sum (alpha_i / p_i) x_i = 0
  QVector alpha = {1, 2, -3, 5};
  QVector p = {2, -1, 3, 7};
  LinSpace h = *LinSpace::from_equations(QMatrix::from_rows(std::vector<QVector>{alpha}, 4));
  QVector scaled(4);
  for (std::size_t i = 0; i < 4; ++i) scaled[i] = alpha[i] / p[i];
  LinSpace expect = *LinSpace::from_equations(QMatrix::from_rows(std::vector<QVector>{scaled}, 4));
  EXPECT_EQ(*point_times_space(PPoint(p), h), expect);

  LinSpace aba(QMatrix{{1, 0, 1}, {0, 1, 0}});
  auto dropped = point_times_space(pt({1, 0, 1}), aba);
  ASSERT_TRUE(dropped);
  EXPECT_EQ(dropped->dim(), 0u);
  EXPECT_EQ(dropped->generator(0), pt({1, 0, 1}));
  EXPECT_FALSE(point_times_space(pt({0, 0, 1}), LinSpace(QMatrix{{1, 0, 0}, {0, 1, 0}})));
  EXPECT_THROW(point_times_space(pt({1, 1}), aba), DimensionError);
}

TEST(PointTimesSpace, DistinctPointsGiveDistinctSpaces) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = rng.uniform(2, 5);
    LinSpace l = oracle::random_generic_line(n, rng);
    PPoint p = sample_point(LinSpace::whole(n), rng, {.avoid_delta = n - 1});
    PPoint q = sample_point(LinSpace::whole(n), rng, {.avoid_delta = n - 1});
    if (p == q) continue;
    EXPECT_FALSE(*point_times_space(p, l) == *point_times_space(q, l));
  }
}

TEST(PointTimesSpace, PlueckerScalesByCoordinates) {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = rng.uniform(2, 5), m = rng.uniform(1, n - 1);
    LinSpace l = oracle::random_space(m, n, rng);
    PPoint p = sample_point(LinSpace::whole(n), rng, {.avoid_delta = n - 1});
    auto before = pluecker(l).entries();
    auto after = pluecker(*point_times_space(p, l)).entries();
    std::map<IndexSet, Rational> expect;
    for (const auto& [s, v] : before) {
      Rational scale = 1;
      for (std::size_t j : s) scale *= p[j];
      expect[s] = v * scale;
    }
    EXPECT_TRUE(PlueckerVector(n, m, after).proportional_to(PlueckerVector(n, m, expect)));
  }
}

TEST(Pluecker, Examples) {
  PlueckerVector a = pluecker(line_through(pt({1, 1, 1}), pt({1, 2, 3})));
  EXPECT_EQ(a.bracket({0, 1}), 1);
  EXPECT_EQ(a.bracket({0, 2}), 2);
  EXPECT_EQ(a.bracket({1, 2}), 1);
  EXPECT_EQ(a.bracket({2, 0}), -2);
  EXPECT_EQ(a.bracket({1, 1}), 0);
  EXPECT_FALSE(a.has_vanishing_entry());

  PlueckerVector b = pluecker(LinSpace(QMatrix{{1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(b.bracket({0, 1}), 1);
  EXPECT_EQ(b.bracket({0, 2}), 0);
  EXPECT_EQ(*b.first_vanishing_entry(), (IndexSet{0, 2}));

  PlueckerVector c = pluecker(line_through(pt({2, 3, 5, 7}), pt({11, 13, 17, 19})));
  EXPECT_EQ(c.bracket({0, 1}), -7);
}

TEST(Pluecker, EntriesAreMaximalMinors) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = rng.uniform(2, 5), m = rng.uniform(0, n);
    LinSpace l = oracle::random_space(m, n, rng);
    PlueckerVector pl = pluecker(l);
    for (const auto& [s, v] : pl.entries()) {
      EXPECT_EQ(v, oracle::leibniz_det(l.generators().select_columns(s)));
    }
  }
}

TEST(LineThrough, Examples) {
  EXPECT_EQ(line_through(pt({1, 0}), pt({0, 1})), LinSpace::whole(1));
  LinSpace l = line_through(pt({2, 3, 5, 7}), pt({11, 13, 17, 19}));
  EXPECT_TRUE(l.contains(pt({13, 16, 22, 26})));
  EXPECT_THROW(line_through(pt({1, 2}), pt({2, 4})), PreconditionError);
}

TEST(ToricConcat, Examples) {
  EXPECT_EQ(toric_concat(IntMatrix{{1, 1, 1}}, IntMatrix{{1, 1, 1}}), (IntMatrix{{1, 1, 1}, {1, 1, 1}}));
  IntMatrix veronese{{2, 1, 0}, {0, 1, 2}};
  IntMatrix twos{{2, 2, 2}};
  EXPECT_EQ(toric_concat(veronese, twos), (IntMatrix{{2, 1, 0}, {0, 1, 2}, {2, 2, 2}}));
  EXPECT_EQ(toric_concat(toric_concat(veronese, twos), twos), toric_concat(veronese, toric_concat(twos, twos)));
  EXPECT_THROW(toric_concat(veronese, IntMatrix{{1, 1}}), DimensionError);
  EXPECT_THROW(toric_concat(IntMatrix{{1, 0, 0}}, twos), PreconditionError);
}

TEST(SamplePoint, DeterminismAvoidanceAndBudget) {
  LinSpace l = line_through(pt({1, 1, 1, 1}), pt({1, 2, 3, 4}));
  Rng a(9), b(9);
  EXPECT_EQ(sample_point(l, a).coords(), sample_point(l, b).coords());

  LinSpace single = LinSpace::point(pt({3, 0, 1}));
  Rng c(1);
  EXPECT_EQ(sample_point(single, c), pt({3, 0, 1}));

  Rng d(2);
  for (int t = 0; t < 20; ++t) {
    EXPECT_EQ(sample_point(l, d, {.avoid_delta = 2}).nonzero_count(), 4u);
  }

  LinSpace coordinate(QMatrix{{1, 0, 0}, {0, 1, 0}});
  Rng e(3);
  EXPECT_THROW(sample_point(coordinate, e, {.avoid_delta = 1, .retry_budget = 8}), BudgetExhausted);
}
