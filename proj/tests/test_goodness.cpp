#include <gtest/gtest.h>

#include "icat/goodness.hpp"

using namespace icat;

namespace {

std::vector<Rational> taylor(const UPoly& p, const UPoly& q, int terms) {
  AlphaSequence s = AlphaSequence::from_rational(p, q);
  return s.prefix(static_cast<std::size_t>(terms));
}

std::vector<Rational> factorials(int terms) {
  std::vector<Rational> out;
  Rational f(1);
  for (int g = 0; g < terms; ++g) {
    if (g > 0) f *= g;
    out.push_back(f);
  }
  return out;
}

UPoly one_minus(const Rational& lambda) { return UPoly(std::vector<Rational>{1, -lambda}); }

}  // namespace

TEST(FitRational, Geometric) {
  RationalSeriesFit f = fit_rational({1, 3, 9, 27, 81, 243});
  ASSERT_TRUE(f.rational);
  EXPECT_EQ(f.p, UPoly(Rational(1)));
  EXPECT_EQ(f.q, one_minus(3));
  EXPECT_EQ(f.recurrence, (std::vector<Rational>{-3}));
  EXPECT_TRUE(f.good);
  EXPECT_TRUE(f.loyal_strict);
  EXPECT_TRUE(f.loyal);
}

TEST(FitRational, LinearPolynomialIsLoyalButNotGood) {
  RationalSeriesFit f = fit_rational({0, 2, 0, 0, 0, 0});
  ASSERT_TRUE(f.rational);
  EXPECT_EQ(f.p, UPoly(std::vector<Rational>{0, 2}));
  EXPECT_EQ(f.q, UPoly(Rational(1)));
  EXPECT_FALSE(f.deg_p_le_deg_q);
  EXPECT_FALSE(f.good);
  EXPECT_TRUE(f.loyal);
  EXPECT_TRUE(check_loyal({1, 2, 0, 0, 0, 0}).loyal);
}

TEST(FitRational, Fibonacci) {
  RationalSeriesFit f = fit_rational({1, 1, 2, 3, 5, 8, 13, 21});
  ASSERT_TRUE(f.rational);
  EXPECT_EQ(f.q, UPoly(std::vector<Rational>{1, -1, -1}));
  EXPECT_EQ(f.p, UPoly(Rational(1)));
  EXPECT_TRUE(f.q_squarefree);
  EXPECT_TRUE(f.good);
}

TEST(FitRational, RepeatedPoleIsNotGood) {
  RationalSeriesFit f = fit_rational({1, 2, 3, 4, 5, 6, 7});
  ASSERT_TRUE(f.rational);
  EXPECT_EQ(f.q, one_minus(1) * one_minus(1));
  EXPECT_FALSE(f.q_squarefree);
  EXPECT_FALSE(f.good);
  EXPECT_FALSE(f.loyal);
}

TEST(FitRational, FactorialHasNoRecurrence) {
  RationalSeriesFit f = fit_rational(factorials(25));
  EXPECT_FALSE(f.rational);
  EXPECT_EQ(f.hankel_size, 13u);
  EXPECT_TRUE(f.hankel_full_rank());
  EXPECT_FALSE(check_loyal(factorials(25)).loyal);
}

TEST(FitRational, SurplusIsRequired) {
  EXPECT_THROW(fit_rational({1, 2, 3}), std::invalid_argument);
  // (1 + X)/(1 - X - X^2) has 4 unknowns and needs 3 checks: 6 terms are not enough.
  EXPECT_FALSE(fit_rational({1, 2, 3, 5, 8, 13}).rational);
  EXPECT_TRUE(fit_rational({1, 2, 3, 5, 8, 13, 21}).rational);
  EXPECT_TRUE(fit_rational({0, 0, 0, 0}).rational);
}

TEST(FitRational, LoyalBasisRoundTrip) {
  for (const Rational lambda : {Rational(1), Rational(2), Rational(5), Rational(-3)}) {
    const std::vector<std::pair<UPoly, UPoly>> basis = {
        {UPoly(Rational(1)), UPoly(Rational(1))},
        {UPoly::monomial(1), UPoly(Rational(1))},
        {UPoly(Rational(1)), one_minus(lambda)},
    };
    for (const auto& [p, q] : basis) {
      RationalSeriesFit f = fit_rational(taylor(p, q, 6));
      ASSERT_TRUE(f.rational);
      EXPECT_EQ(f.p, p);
      EXPECT_EQ(f.q, q);
      EXPECT_TRUE(f.loyal);
    }
    // a + bX + c/(1 - lambda X) stays in the span.
    const UPoly q = one_minus(lambda);
    const UPoly p = UPoly(std::vector<Rational>{2, -1}) * q + UPoly(Rational(3));
    RationalSeriesFit f = fit_rational(taylor(p, q, 8));
    ASSERT_TRUE(f.rational);
    EXPECT_EQ(f.q, q);
    EXPECT_TRUE(f.loyal);
  }
}

TEST(TraceSeries, SwapForGlAtFive) {
  Character chi = gl_character().specialize({Rational(5)});
  const std::vector<int> sigma{1, 0};
  const LinCombo swap(Diagram::permutation(gl_signature(), sigma));
  const std::vector<Rational> s = trace_series(swap, chi, 6);
  EXPECT_EQ(s, (std::vector<Rational>{25, 5, 25, 5, 25, 5, 25}));
  RationalSeriesFit f = fit_rational(s);
  EXPECT_EQ(f.q, UPoly(std::vector<Rational>{1, 0, -1}));
  EXPECT_TRUE(f.good);
}

TEST(TraceSeries, QuotientAgreesWithDiagramPowers) {
  Character chi = sym_character().specialize({Rational(7)});
  QuotientAlgebra a = quotient_algebra(2, chi, "partition", 0);
  LinCombo t(a.spanning.front().signature_ptr(), 2, 2);
  t.add(a.spanning[1], Poly(2));
  t.add(a.spanning[4], Poly(-1));
  t.add(a.spanning[9], Poly(3));
  EXPECT_EQ(trace_series(a.coordinates(t), a, 5), trace_series(t, chi, 5));
}

TEST(Goodness, SymmetricGroupFamilyPasses) {
  GoodnessConfig c;
  c.pq_list = {{1, 1}, {2, 2}};
  c.method = "partition";
  c.cutoff = 0;
  c.n_max = 12;
  c.point = {Rational(7)};
  GoodnessReport r = check_goodness(sym_character(), c);
  EXPECT_EQ(r.verdict, Verdict::pass) << r.witness;
  EXPECT_EQ(exit_code(r.verdict), 0);
  EXPECT_EQ(r.fits.size(), 2u + 15u + 2u * 16u);
  for (const auto& e : r.saturation) EXPECT_TRUE(e.dim.saturated);
}

TEST(Goodness, FactorialFrobeniusFails) {
  GoodnessConfig c;
  c.method = "cobordism";
  c.cutoff = 1;
  c.n_max = 24;
  GoodnessReport r = check_goodness(frobenius_character(AlphaSequence::from_list(factorials(40))), c);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(exit_code(r.verdict), 2);
  EXPECT_NE(r.witness.find("no linear recurrence"), std::string::npos) << r.witness;
}

TEST(Goodness, GeometricFrobeniusPasses) {
  GoodnessConfig c;
  c.method = "cobordism";
  c.cutoff = 1;
  c.n_max = 10;
  GoodnessReport r = check_goodness(
      frobenius_character(AlphaSequence::from_rational(UPoly(Rational(1)), one_minus(2))), c);
  EXPECT_EQ(r.verdict, Verdict::pass) << r.witness;
}

TEST(Goodness, SeededAndDeterministic) {
  GoodnessConfig c;
  c.pq_list = {{1, 1}};
  c.method = "partition";
  c.cutoff = 0;
  c.n_max = 6;
  c.point = {Rational(4)};
  c.seed = 11;
  GoodnessReport a = check_goodness(sym_character(), c);
  GoodnessReport b = check_goodness(sym_character(), c);
  ASSERT_EQ(a.fits.size(), b.fits.size());
  for (std::size_t i = 0; i < a.fits.size(); ++i) {
    EXPECT_EQ(a.fits[i].label, b.fits[i].label);
    EXPECT_EQ(a.fits[i].series, b.fits[i].series);
  }
  EXPECT_EQ(a.seed, 11u);
}

TEST(Goodness, MissingPointIsAConfigurationError) {
  EXPECT_THROW(check_goodness(sym_character(), GoodnessConfig{}), std::invalid_argument);
  EXPECT_EQ(exit_code(Verdict::inconclusive), 3);
  EXPECT_EQ(to_string(Verdict::fail), "fail");
}
