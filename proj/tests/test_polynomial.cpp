#include <gtest/gtest.h>

#include "icat/linalg.hpp"
#include "icat/polynomial.hpp"

using namespace icat;

namespace {

UPoly t() { return UPoly::monomial(1); }

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(to_string(Rational(-3) / 9), "-1/3");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_EQ(height(Rational(-7, 3)), Integer(7));
}

TEST(UPoly, ArithmeticAndEvaluation) {
  const UPoly p = t() * t() - UPoly(Rational(1));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(Rational(3)), Rational(8));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.derivative(), t() * Rational(2));
  EXPECT_EQ(p.to_string(), "t^2 - 1");
}

TEST(UPoly, DivisionAndGcd) {
  const UPoly a = (t() - Rational(1)) * (t() - Rational(2)) * (t() + Rational(3));
  const UPoly b = (t() - Rational(1)) * (t() + Rational(3)) * (t() + Rational(5));
  EXPECT_EQ(gcd(a, b), (t() - Rational(1)) * (t() + Rational(3)));
  auto [q, r] = divmod(a, t() - Rational(2));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, (t() - Rational(1)) * (t() + Rational(3)));
  EXPECT_THROW(exact_div(a, t() + Rational(7)), std::domain_error);
  EXPECT_THROW(divmod(a, UPoly()), std::domain_error);
}

TEST(UPoly, Squarefree) {
  EXPECT_TRUE(is_squarefree(t() * (t() - Rational(1))));
  EXPECT_FALSE(is_squarefree(t() * t()));
  EXPECT_TRUE(is_squarefree(UPoly(Rational(3))));
}

TEST(UPoly, RationalRootsWithMultiplicity) {
  // t^3 (t - 1)^2 (t + 2) (2t - 3), plus an irreducible quadratic factor.
  UPoly p = t() * t() * t() * (t() - Rational(1)) * (t() - Rational(1)) * (t() + Rational(2)) *
            (t() * Rational(2) - Rational(3)) * (t() * t() + Rational(1));
  auto roots = rational_roots(p);
  ASSERT_EQ(roots.size(), 4u);
  EXPECT_EQ(roots[0], std::make_pair(Rational(-2), 1));
  EXPECT_EQ(roots[1], std::make_pair(Rational(0), 3));
  EXPECT_EQ(roots[2], std::make_pair(Rational(1), 2));
  EXPECT_EQ(roots[3], std::make_pair(Rational(3, 2), 1));
}

TEST(UPoly, InterpolationRecoversPolynomial) {
  const UPoly p = t() * t() * t() * Rational(2, 3) - t() + Rational(5);
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int i = -2; i <= 1; ++i) {
    xs.emplace_back(i);
    ys.push_back(p(Rational(i)));
  }
  EXPECT_EQ(interpolate(xs, ys), p);
}

TEST(Poly, MultivariateBasics) {
  const Poly x = Poly::variable(0);
  const Poly y = Poly::variable(1);
  const Poly p = x * y * y + Poly(Rational(3)) * x - Poly(1);
  EXPECT_EQ(p.num_vars(), 2u);
  EXPECT_EQ(p.total_degree(), 3);
  EXPECT_EQ(p.evaluate({Rational(2), Rational(3)}), Rational(23));
  const Poly sub = p.substitute({std::nullopt, Rational(2)});
  EXPECT_EQ(sub.to_univariate(), t() * Rational(7) - Rational(1));
  EXPECT_THROW((void)p.to_univariate(), std::logic_error);
  EXPECT_EQ((x + y).pow(2), x * x + Poly(2) * x * y + y * y);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(Poly(Rational(4)).constant_value(), Rational(4));
}

TEST(Linalg, RankNullspaceSolve) {
  Matrix<Rational> m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(m), 2u);
  auto ker = nullspace(m, 3);
  ASSERT_EQ(ker.size(), 1u);
  for (const auto& row : m) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += row[j] * ker[0][j];
    EXPECT_EQ(s, 0);
  }
  auto x = solve(m, std::vector<Rational>{6, 12, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_FALSE(solve(m, std::vector<Rational>{1, 0, 0}).has_value());
  EXPECT_EQ(independent_rows(m), (std::vector<std::size_t>{0, 2}));
}

TEST(Linalg, DeterminantAndInverse) {
  Matrix<Rational> m = {{2, 1}, {7, 4}};
  EXPECT_EQ(determinant(m), Rational(1));
  auto inv = inverse(m);
  EXPECT_EQ(inv[0][0], 4);
  EXPECT_EQ(inv[0][1], -1);
  EXPECT_EQ(inv[1][0], -7);
  EXPECT_EQ(inv[1][1], 2);
  EXPECT_THROW(inverse(Matrix<Rational>{{1, 2}, {2, 4}}), std::domain_error);
}

TEST(Linalg, RationalFunctionFieldRank) {
  // [[t, t], [t, t^2]] is generically invertible.
  Matrix<RatFunc> m = {{RatFunc(t()), RatFunc(t())}, {RatFunc(t()), RatFunc(t() * t())}};
  EXPECT_EQ(rank(m), 2u);
  RatFunc r = RatFunc(t() * t() - Rational(1), t() - Rational(1));
  EXPECT_EQ(r.num(), t() + Rational(1));
  EXPECT_EQ(r.den(), UPoly(Rational(1)));
}

TEST(Linalg, BareissMatchesDeterminant) {
  // GL_t Gram at p = 2.
  Matrix<UPoly> g = {{t() * t(), t()}, {t(), t() * t()}};
  BareissResult b = bareiss(g);
  EXPECT_EQ(b.rank, 2u);
  EXPECT_EQ(b.last_pivot, t() * t() * t() * t() - t() * t());
  Matrix<UPoly> singular = {{t(), t()}, {t(), t()}};
  EXPECT_EQ(bareiss(singular).rank, 1u);
}
