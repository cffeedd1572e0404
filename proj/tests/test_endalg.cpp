#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "icat/endalg.hpp"
#include "support.hpp"

using namespace icat;

namespace {

Model dual_numbers(const std::vector<Rational>& counit) {
  return frobenius_model({1, 0}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, counit, "k[y]/(y^2)");
}

FiniteAlgebra two_dim(const Rational& square) {
  // Basis {1, y} with y^2 = square.
  FiniteAlgebra a;
  a.dim = 2;
  a.mult = {{{1, 0}, {0, 1}}, {{0, 1}, {square, 0}}};
  a.unit = {1, 0};
  return a;
}

}  // namespace

TEST(EndAlg, DirectlyEnteredAlgebras) {
  FiniteAlgebra s2 = two_dim(1);
  EXPECT_TRUE(is_semisimple(s2).semisimple);
  EXPECT_EQ(simple_count(s2), 2u);
  EXPECT_TRUE(s2.is_associative());
  EXPECT_TRUE(s2.unit_acts_trivially());

  FiniteAlgebra dual = two_dim(0);
  SemisimplicityVerdict v = is_semisimple(dual);
  EXPECT_FALSE(v.semisimple);
  ASSERT_EQ(v.witness.size(), 2u);
  EXPECT_EQ(v.witness[0], 0);
  EXPECT_NE(v.witness[1], 0);
  EXPECT_THROW(simple_count(dual), std::invalid_argument);

  // Q(sqrt 2) is simple over Q but splits into two blocks over the closure.
  EXPECT_EQ(simple_count(two_dim(2)), 2u);
}

TEST(EndAlg, GlAtFive) {
  QuotientAlgebra a = quotient_algebra(2, gl_character(), "permutation", 0, {Rational(5)});
  ASSERT_EQ(a.dim(), 2u);
  EXPECT_TRUE(a.warnings.empty());
  // swap^2 = id.
  EXPECT_EQ(a.algebra.mult[1][1], (std::vector<Rational>{1, 0}));
  EXPECT_EQ(a.algebra.unit, (std::vector<Rational>{1, 0}));
  EXPECT_TRUE(is_semisimple(a.algebra).semisimple);
  EXPECT_EQ(simple_count(a.algebra), 2u);
  EXPECT_EQ(a.trace, (std::vector<Rational>{25, 5}));
}

TEST(EndAlg, SymmetricGroupFamily) {
  QuotientAlgebra a = quotient_algebra(1, sym_character(), "partition", 0, {Rational(7)});
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_TRUE(is_semisimple(a.algebra).semisimple);
  EXPECT_EQ(simple_count(a.algebra), 2u);
  // At t = 4 the commutant of S_4 on K^4 has two blocks as well.
  QuotientAlgebra at4 = quotient_algebra(1, sym_character(), "partition", 0, {Rational(4)});
  EXPECT_EQ(simple_count(at4.algebra), 2u);
  EXPECT_EQ(at4.dim(), realized_rank(at4.spanning, sep_algebra_model(4)));

  QuotientAlgebra p2 = quotient_algebra(2, sym_character(), "partition", 0, {Rational(7)});
  EXPECT_EQ(p2.dim(), 15u);
  EXPECT_TRUE(p2.warnings.empty());
  EXPECT_TRUE(is_semisimple(p2.algebra).semisimple);
  EXPECT_TRUE(p2.algebra.is_associative(6));
  EXPECT_TRUE(p2.algebra.unit_acts_trivially());
}

TEST(EndAlg, OrthogonalAtOne) {
  QuotientAlgebra a = quotient_algebra(2, orth_character(), "brauer", 0, {Rational(1)});
  EXPECT_EQ(a.dim(), realized_rank(a.spanning, orth_model(1)));
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_TRUE(is_semisimple(a.algebra).semisimple);
}

TEST(EndAlg, TraceConsistencyAndCyclicity) {
  QuotientAlgebra a = quotient_algebra(2, sym_character(), "partition", 0, {Rational(7)});
  const Diagram id = Diagram::identity(partition_signature(), 2);
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::size_t> pick(0, a.dim() - 1);
  for (std::size_t i = 0; i < a.dim(); ++i)
    EXPECT_EQ(a.trace[i], pair_diagrams(a.basis(i), id, *a.chi).constant_value());
  for (int trial = 0; trial < 20; ++trial) {
    const Diagram& f = a.basis(pick(rng));
    const Diagram& g = a.basis(pick(rng));
    EXPECT_EQ(a.chi->evaluate(trace_close(compose(f, g))), a.chi->evaluate(trace_close(compose(g, f))));
  }
}

TEST(EndAlg, SimpleCountIgnoresBasisOrder) {
  SpanningSet s = enumerate_partition(partition_signature(), 2, 2);
  Character chi = sym_character().specialize({Rational(7)});
  const std::size_t base = simple_count(quotient_algebra(s, chi).algebra);
  std::mt19937 rng(9);
  for (int trial = 0; trial < 2; ++trial) {
    SpanningSet shuffled = s;
    std::shuffle(shuffled.diagrams.begin(), shuffled.diagrams.end(), rng);
    EXPECT_EQ(simple_count(quotient_algebra(shuffled, chi).algebra), base);
  }
  // Multiplicities 2, 3, 1, 1 of the four simples in W^2: 4 + 9 + 1 + 1 = 15.
  EXPECT_EQ(base, 4u);
}

TEST(EndAlg, NilpotentJordanBlock) {
  Character jordan = char_from_model(endo_model({{0, 1}, {0, 0}}));
  QuotientAlgebra a = quotient_algebra(1, jordan, "generic", 3);
  const LinCombo t(Diagram::generator(endo_signature(), "T"));
  NilpotentVerdict v = nilpotent_trace_check(t, a, 4);
  EXPECT_EQ(v.outcome, NilpotentVerdict::Outcome::pass);
  EXPECT_EQ(v.r, 1);
  EXPECT_EQ(v.trace, 0);
}

TEST(EndAlg, IdentityIsNeverNegligible) {
  QuotientAlgebra a = quotient_algebra(1, gl_character(), "permutation", 0, {Rational(5)});
  NilpotentVerdict v = nilpotent_trace_check(LinCombo(Diagram::identity(gl_signature(), 1)), a, 5);
  EXPECT_EQ(v.outcome, NilpotentVerdict::Outcome::inconclusive);
  EXPECT_EQ(v.r, 0);
}

TEST(EndAlg, HandleOfDualNumbers) {
  Character chi = char_from_model(dual_numbers({0, 1}));
  QuotientAlgebra a = quotient_algebra(1, chi, "cobordism", 1);
  EXPECT_EQ(a.dim(), 4u);
  EXPECT_TRUE(is_semisimple(a.algebra).semisimple);
  EXPECT_EQ(simple_count(a.algebra), 1u);
  NilpotentVerdict v = nilpotent_trace_check(LinCombo(handle_diagram(frobenius_signature())), a, 4);
  EXPECT_EQ(v.outcome, NilpotentVerdict::Outcome::pass);
  EXPECT_EQ(v.r, 2);
  EXPECT_EQ(v.trace, 0);
}

TEST(EndAlg, NilpotentWithNonzeroTraceFails) {
  // A character that makes T negligible yet gives it a nonzero trace cannot come
  // from a model; force it by a closed form with Tr(T) = 1 and Tr(T^i) = 0 otherwise.
  Character odd(
      endo_signature(), {},
      [](const Diagram& d) {
        const int i = d.count("T");
        return Poly(i == 0 ? 1 : i == 1 ? 1 : 0);
      },
      {}, "test");
  QuotientAlgebra a = quotient_algebra(1, odd, "generic", 3);
  NilpotentVerdict v = nilpotent_trace_check(LinCombo(Diagram::generator(endo_signature(), "T")), a, 4);
  EXPECT_EQ(v.outcome, NilpotentVerdict::Outcome::fail);
  EXPECT_EQ(v.trace, 1);
}

TEST(EndAlg, GenericProbe) {
  GenericProbe g = probe_generic(1, sym_character(), "partition", 0, 42);
  ASSERT_EQ(g.points.size(), 3u);
  EXPECT_TRUE(g.agree);
  EXPECT_EQ(g.dims, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(g.simple_counts, (std::vector<std::size_t>{2, 2, 2}));
  for (const auto& x : g.points) EXPECT_GE(height(x), 1000);
  GenericProbe again = probe_generic(1, sym_character(), "partition", 0, 42);
  EXPECT_EQ(again.points, g.points);
}
