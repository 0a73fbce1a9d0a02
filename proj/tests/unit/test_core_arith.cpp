#include <gtest/gtest.h>

#include "hadamard/combinatorics.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/int_matrix.hpp"
#include "hadamard/qmatrix.hpp"
#include "hadamard/random.hpp"
#include "hadamard/rational.hpp"
#include "hadamard/sparse_poly.hpp"
#include "oracles.hpp"

using namespace hadamard;

namespace {

QMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng, long bound = 5) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = make_rational(rng.uniform(-bound, bound), rng.uniform(1, 3));
  }
  return m;
}

SparsePoly random_poly(std::size_t vars, Rng& rng) {
  SparsePoly p(vars);
  for (int t = 0; t < 4; ++t) {
    Exponent e(vars);
    for (auto& x : e) x = static_cast<unsigned>(rng.uniform(0, 2));
    p.add_term(e, make_rational(rng.uniform(-9, 9), rng.uniform(1, 4)));
  }
  return p;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("+4/2"), Rational(2));
  EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
}

TEST(Rational, PrimitiveVector) {
  QVector v = {make_rational(-1, 2), make_rational(3, 4), 0};
  EXPECT_EQ(lcm_of_denominators(v), 4);
  QVector p = primitive_vector(v);
  EXPECT_EQ(p, (QVector{2, -3, 0}));
}

TEST(Combinatorics, Counts) {
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(5), 120);
  std::vector<std::size_t> parts = {2, 2};
  EXPECT_EQ(multinomial(parts), 6);
  EXPECT_EQ(subsets(6, 3).size(), 20u);
  EXPECT_EQ(subsets(4, 2).front(), (IndexSet{0, 1}));
  EXPECT_EQ(subsets(4, 2).back(), (IndexSet{2, 3}));
  auto comps = compositions(3, 2);
  EXPECT_EQ(comps.size(), 6u);
  EXPECT_EQ(comps.front(), (std::vector<unsigned>{2, 0, 0}));
  std::vector<std::size_t> odd = {1, 0, 2}, repeated = {1, 1};
  EXPECT_EQ(sort_sign(odd), -1);
  EXPECT_EQ(sort_sign(repeated), 0);
}

TEST(Rref, Examples) {
  auto id = rref(QMatrix::identity(3));
  EXPECT_EQ(id.reduced, QMatrix::identity(3));
  EXPECT_EQ(id.rank, 3u);
  EXPECT_EQ(rank(QMatrix{{1, 2, 3}, {2, 4, 6}}), 1u);
  EXPECT_EQ(rank(QMatrix{{1, 1, 1}, {1, 2, 3}, {1, 4, 9}}), 3u);
  auto r = rref(QMatrix{{2, 4, 6}, {1, 1, 1}});
  EXPECT_EQ(r.reduced, (QMatrix{{1, 0, -1}, {0, 1, 2}}));
  EXPECT_EQ(r.pivot_columns, (std::vector<std::size_t>{0, 1}));
}

TEST(Nullspace, Examples) {
  EXPECT_TRUE(nullspace(QMatrix::identity(3)).empty());
  auto a = nullspace(QMatrix{{1, -1}});
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], (QVector{1, 1}));
  auto b = nullspace(QMatrix{{1, 0, -1}, {0, 1, -1}});
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], (QVector{1, 1, 1}));
}

TEST(Determinant, MatchesLeibniz) {
  Rng rng(1);
  for (int t = 0; t < 40; ++t) {
    std::size_t k = rng.uniform(1, 5);
    QMatrix m = random_matrix(k, k, rng);
    EXPECT_EQ(determinant(m), oracle::leibniz_det(m));
  }
}

TEST(Rank, PropertiesOnRandomMatrices) {
  Rng rng(2);
  for (int t = 0; t < 40; ++t) {
    QMatrix m = random_matrix(rng.uniform(1, 5), rng.uniform(1, 5), rng, 2);
    std::size_t r = rank(m);
    EXPECT_EQ(r, rank(m.transpose()));
    EXPECT_EQ(r, oracle::minor_rank(m));
    EXPECT_EQ(r, rref(m).rank);
    auto kernel = nullspace(m);
    EXPECT_EQ(kernel.size(), m.cols() - r);
    for (const auto& v : kernel) {
      for (const auto& x : m.apply(v)) EXPECT_EQ(x, 0);
    }
    EXPECT_EQ(independent_rows(m).size(), r);
  }
}

TEST(Rref, PreservesRowSpace) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    QMatrix m = random_matrix(3, 5, rng, 3);
    auto r = rref(m);
    EXPECT_EQ(rank(m.stacked(r.reduced)), r.rank);
  }
}

TEST(SmithNormalForm, Examples) {
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)), (std::vector<Integer>{1, 1, 1}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{0, 1, 0, 0}, {0, 0, 0, 1}}), (std::vector<Integer>{1, 1}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4}, {4, 8}}), (std::vector<Integer>{2, 0}));
}

TEST(SmithNormalForm, DivisibilityAndMinorGcd) {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = rng.uniform(1, 3), c = rng.uniform(r, 4);
    IntMatrix a(r, c);
    QMatrix q(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        a(i, j) = rng.uniform(-6, 6);
        q(i, j) = Rational(a(i, j));
      }
    }
    auto d = smith_normal_form(a);
    ASSERT_EQ(d.size(), r);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i] != 0) EXPECT_EQ(d[i + 1] % d[i], 0);
      EXPECT_GE(d[i], 0);
    }
    // product of invariant factors = gcd of maximal minors
    Integer product = 1;
    for (const auto& x : d) product *= x;
    Integer g = 0;
    for (const auto& cols : subsets(c, r)) {
      Rational m = oracle::leibniz_det(q.select_columns(cols));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(m.get_num())).get_mpz_t());
    }
    EXPECT_EQ(product, g);
  }
}

TEST(SmithNormalForm, UnimodularHasUnitDiagonal) {
  IntMatrix u{{1, 2, 3}, {0, 1, 4}, {0, 0, 1}};
  IntMatrix v{{1, 0, 0}, {5, 1, 0}, {-2, 7, 1}};
  IntMatrix uv(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) uv(i, j) += u(i, k) * v(k, j);
    }
  }
  EXPECT_EQ(smith_normal_form(uv), (std::vector<Integer>{1, 1, 1}));
}

TEST(SparsePoly, Examples) {
  auto x0 = SparsePoly::variable(2, 0), x1 = SparsePoly::variable(2, 1);
  SparsePoly diff = (x0 + x1) * (x0 - x1);
  EXPECT_EQ(diff, x0.pow(2) - x1.pow(2));
  EXPECT_EQ(diff.evaluate(QVector{3, 2}), 5);
  EXPECT_TRUE((diff * SparsePoly(2)).is_zero());
  EXPECT_TRUE((diff * Rational(0)).is_zero());
  EXPECT_EQ(diff.total_degree(), 2);
  EXPECT_TRUE(diff.is_homogeneous());
  EXPECT_EQ(SparsePoly(2).total_degree(), -1);
  EXPECT_EQ(diff.to_string(), "x0^2 - x1^2");
  EXPECT_THROW(diff.evaluate(QVector{1}), DimensionError);
}

TEST(SparsePoly, PrimitiveAndProportionality) {
  auto x0 = SparsePoly::variable(2, 0), x1 = SparsePoly::variable(2, 1);
  SparsePoly p = x0 * make_rational(-2, 3) + x1 * make_rational(4, 3);
  SparsePoly prim = p.primitive();
  EXPECT_EQ(prim, x0 - x1 * Rational(2));  // x0 is the lexicographically largest term
  auto ratio = proportionality(p, prim);
  ASSERT_TRUE(ratio);
  EXPECT_EQ(*ratio, make_rational(-2, 3));
  EXPECT_FALSE(proportionality(x0, x1));
}

TEST(SparsePoly, Substitute) {
  auto x0 = SparsePoly::variable(2, 0), x1 = SparsePoly::variable(2, 1);
  SparsePoly f = x0 * x1 + x0.pow(2);
  std::vector<SparsePoly> images = {x0 + x1, x0 - x1};
  EXPECT_EQ(f.substitute(images), (x0 + x1) * (x0 - x1) + (x0 + x1).pow(2));
}

TEST(SparsePoly, RingAxiomsOnRandomTriples) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    SparsePoly a = random_poly(3, rng), b = random_poly(3, rng), c = random_poly(3, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    QVector pt = {make_rational(rng.uniform(-5, 5), 2), Rational(rng.uniform(-5, 5)), Rational(3)};
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
  }
}

TEST(Rng, DeterministicAndBounded) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    auto x = a.uniform(-3, 3);
    EXPECT_EQ(x, b.uniform(-3, 3));
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 3);
  }
}
