#include <gtest/gtest.h>

#include <set>

#include "icat/diagram_io.hpp"
#include "icat/enumerate.hpp"
#include "icat/lincombo.hpp"
#include "icat/realize.hpp"
#include "support.hpp"

using namespace icat;
using namespace icat::testing;

namespace {

std::set<std::string> keys(const SpanningSet& s) {
  std::set<std::string> out;
  for (const auto& d : s.diagrams) out.insert(canonical_key(d));
  return out;
}

long double_factorial(int n) {
  long r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

}  // namespace

TEST(DiagramIo, RoundTripsRandomDiagrams) {
  std::mt19937 rng(3);
  auto sig = mixed_sig();
  for (int trial = 0; trial < 100; ++trial) {
    Diagram d = random_with_inputs(sig, trial % 3, 5, rng);
    const std::string text = format_diagram(d);
    Diagram back = parse_diagram(sig, text);
    EXPECT_EQ(back.wiring(), d.wiring()) << text;
    EXPECT_EQ(back.boxes(), d.boxes()) << text;
  }
}

TEST(DiagramIo, ParsesHandwrittenLiteral) {
  auto sig = partition_signature();
  Diagram d = parse_diagram(
      sig, "boxes: [m#0, u#0]; wires: [(bnd.in[0], m#0.in[0]), (u#0.out[0], m#0.in[1]), (m#0.out[0], bnd.out[0])]; in: 1; out: 1");
  EXPECT_EQ(d.outputs(), 1);
  EXPECT_EQ(d.inputs(), 1);
  EXPECT_EQ(d.count("m"), 1);
  // Wire endpoints may be written sink first.
  Diagram e = parse_diagram(
      sig, "out: 1; in: 1; boxes: [u#0, m#0]; wires: [(m#0.in[0], bnd.in[0]), (m#0.in[1], u#0.out[0]), (bnd.out[0], m#0.out[0])]");
  EXPECT_EQ(d, e);
  Diagram loops = parse_diagram(gl_signature(), "boxes: []; wires: []; in: 0; out: 0; loops: 2");
  EXPECT_EQ(loops.loops(), 2);
}

TEST(DiagramIo, RejectsMalformedLiterals) {
  auto sig = partition_signature();
  EXPECT_THROW(parse_diagram(sig, "boxes: [x#0]; wires: []; in: 0; out: 0"), std::invalid_argument);
  EXPECT_THROW(parse_diagram(sig, "boxes: []; wires: [(bnd.in[0], bnd.in[0])]; in: 1; out: 1"), std::invalid_argument);
  EXPECT_THROW(parse_diagram(sig, "boxes: []; wires: []; in: 1; out: 1"), std::invalid_argument);
  EXPECT_THROW(parse_diagram(sig, "boxes: [] wires: []"), std::invalid_argument);
  EXPECT_THROW(parse_diagram(sig, "boxes: [u#0]; wires: [(u#0.out[3], bnd.out[0])]; in: 0; out: 1"),
               std::invalid_argument);
}

TEST(LinCombo, CancellationAndBilinearity) {
  auto sig = gl_signature();
  std::vector<int> swap{1, 0};
  Diagram id = Diagram::identity(sig, 2);
  Diagram s = Diagram::permutation(sig, swap);
  LinCombo sym = LinCombo(id) + LinCombo(s);
  LinCombo alt = LinCombo(id) - LinCombo(s);
  EXPECT_EQ(sym.size(), 2u);
  EXPECT_TRUE((sym - sym).is_zero());
  // (1 + s)(1 - s) = 1 - s^2 = 0.
  EXPECT_TRUE(compose(sym, alt).is_zero());
  // (1 + s)^2 = 2 (1 + s).
  EXPECT_EQ(compose(sym, sym), sym * Poly(2));
  LinCombo tr = trace_close(sym);
  ASSERT_EQ(tr.size(), 2u);
  EXPECT_THROW(LinCombo(id) + LinCombo(Diagram::identity(sig, 1)), std::invalid_argument);
}

TEST(Enumerate, GenericEmptySignatureIsPermutations) {
  auto sig = gl_signature();
  for (int p = 0; p <= 3; ++p) {
    SpanningSet g = enumerate_generic(sig, p, p, 3);
    SpanningSet perms = enumerate_permutations(sig, p);
    EXPECT_EQ(keys(g), keys(perms)) << "p=" << p;
  }
  EXPECT_EQ(enumerate_generic(sig, 2, 2, 5).diagrams.size(), 2u);
  EXPECT_TRUE(enumerate_generic(sig, 1, 2, 4).diagrams.empty());
}

TEST(Enumerate, PermutationCountsAndCycleCensus) {
  auto sig = gl_signature();
  EXPECT_EQ(enumerate_permutations(sig, 1).diagrams.size(), 1u);
  SpanningSet s3 = enumerate_permutations(sig, 3);
  ASSERT_EQ(s3.diagrams.size(), 6u);
  EXPECT_EQ(s3.diagrams.front(), Diagram::identity(sig, 3));
  std::multiset<int> census;
  for (const auto& d : s3.diagrams) census.insert(trace_close(d).loops());
  // S_3: one identity (3 cycles), three transpositions (2), two 3-cycles (1).
  EXPECT_EQ(census, (std::multiset<int>{1, 1, 2, 2, 2, 3}));
}

TEST(Enumerate, GenericOrthogonalIdentityCase) {
  auto sig = brauer_signature();
  SpanningSet s = enumerate_generic(sig, 1, 1, 2);
  std::set<std::string> ks = keys(s);
  EXPECT_TRUE(ks.count(canonical_key(Diagram::identity(sig, 1))));
  bool has_zigzag = false;
  for (const auto& d : s.diagrams) has_zigzag |= d.num_boxes() == 2;
  EXPECT_TRUE(has_zigzag);
  // The zigzag realizes to the identity, so the realized span is one-dimensional.
  EXPECT_EQ(realized_rank(s.diagrams, orth_model(3)), 1u);
  EXPECT_GT(s.stats.closed_parts, 0u);
}

TEST(Enumerate, GenericNoDuplicatesAndMonotoneRank) {
  auto sig = partition_signature();
  std::size_t prev = 0;
  for (int boxes = 0; boxes <= 3; ++boxes) {
    SpanningSet s = enumerate_generic(sig, 1, 1, boxes);
    EXPECT_EQ(keys(s).size(), s.diagrams.size());
    for (const auto& d : s.diagrams) EXPECT_LE(static_cast<int>(d.num_boxes()), boxes);
    const std::size_t r = realized_rank(s.diagrams, sep_algebra_model(3));
    EXPECT_GE(r, prev);
    prev = r;
  }
  EXPECT_EQ(prev, 2u);
}

TEST(Enumerate, GenericBudgetIsExplicit) {
  EXPECT_THROW(enumerate_generic(partition_signature(), 2, 2, 4, 50), BudgetExceeded);
}

TEST(Enumerate, GenericClosedIsEmptyDiagramOnly) {
  SpanningSet s = enumerate_generic(partition_signature(), 0, 0, 3);
  ASSERT_EQ(s.diagrams.size(), 1u);
  EXPECT_EQ(s.diagrams[0].num_boxes(), 0u);
}

TEST(Enumerate, BrauerCountsAreDoubleFactorials) {
  auto sig = brauer_signature();
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q <= 3; ++q) {
      SpanningSet s = enumerate_brauer(sig, p, q);
      const long expected = (p + q) % 2 ? 0 : double_factorial(p + q - 1);
      EXPECT_EQ(static_cast<long>(s.diagrams.size()), expected) << p << "," << q;
      EXPECT_EQ(s.stats.duplicates, 0u);
    }
  }
  SpanningSet s22 = enumerate_brauer(sig, 2, 2);
  EXPECT_EQ(s22.diagrams.front(), Diagram::identity(sig, 2));
  EXPECT_EQ(enumerate_brauer(sig, 0, 4).diagrams.size(), 3u);
  // Tightness: generic realized rank equals the count.
  EXPECT_EQ(realized_rank(s22.diagrams, orth_model(3)), 3u);
  EXPECT_EQ(realized_rank(enumerate_brauer(sig, 3, 3).diagrams, orth_model(4)), 15u);
}

TEST(Enumerate, PartitionCountsAreBellNumbers) {
  auto sig = partition_signature();
  const std::vector<std::size_t> bell = {1, 1, 2, 5, 15, 52};
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q + p <= 4; ++q) {
      SpanningSet s = enumerate_partition(sig, p, q);
      EXPECT_EQ(s.diagrams.size(), bell[static_cast<std::size_t>(p + q)]) << p << "," << q;
    }
  }
  EXPECT_EQ(realized_rank(enumerate_partition(sig, 1, 1).diagrams, sep_algebra_model(2)), 2u);
  EXPECT_EQ(realized_rank(enumerate_partition(sig, 2, 1).diagrams, sep_algebra_model(3)), 5u);
  EXPECT_EQ(realized_rank(enumerate_partition(sig, 2, 2).diagrams, sep_algebra_model(4)), 15u);
  // Below the stable range the span collapses: K^1 sees a single map.
  EXPECT_EQ(realized_rank(enumerate_partition(sig, 2, 2).diagrams, sep_algebra_model(1)), 1u);
  SpanningSet s00 = enumerate_partition(sig, 0, 0);
  ASSERT_EQ(s00.diagrams.size(), 1u);
  EXPECT_EQ(s00.diagrams[0].num_boxes(), 0u);
}

TEST(Enumerate, PartitionCyclesCloseToSingleComponents) {
  auto sig = partition_signature();
  // Closing a partition diagram never creates closed components beyond the
  // blocks: every closed value under a connected-is-t rule is t^{#components}.
  for (const auto& d : enumerate_partition(sig, 1, 1).diagrams) {
    const auto comps = connected_components(trace_close(d));
    EXPECT_GE(comps.size(), 1u);
    EXPECT_LE(comps.size(), 2u);
  }
}

TEST(Enumerate, CobordismClassesAndGenus) {
  auto sig = frobenius_signature();
  SpanningSet closed = enumerate_cobordism(sig, 0, 0, 3);
  ASSERT_EQ(closed.diagrams.size(), 4u);
  for (int g = 0; g <= 3; ++g) EXPECT_EQ(closed_genus(closed.diagrams[static_cast<std::size_t>(g)]), g);
  EXPECT_EQ(keys(closed).size(), 4u);

  // Boundary partitions {in,out} and {in}{out}, each block of genus 0 or 1.
  SpanningSet s11 = enumerate_cobordism(sig, 1, 1, 1);
  EXPECT_EQ(s11.diagrams.size(), 6u);
  const std::vector<Rational> unit = {1, 0};
  const std::vector<std::vector<std::vector<Rational>>> dual_numbers = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
  EXPECT_EQ(realized_rank(s11.diagrams, frobenius_model(unit, dual_numbers, {0, 1})), 4u);

  SpanningSet s10 = enumerate_cobordism(sig, 1, 0, 0);
  ASSERT_EQ(s10.diagrams.size(), 1u);
  EXPECT_EQ(s10.diagrams[0], Diagram::generator(sig, "u"));

  EXPECT_EQ(closed_genus(trace_close(Diagram::identity(sig, 1))), 1);
  EXPECT_EQ(closed_genus(trace_close(handle_diagram(sig))), 2);
}

TEST(Enumerate, DispatchByName) {
  EXPECT_EQ(enumerate_by_name("brauer", brauer_signature(), 2, 2, 0).diagrams.size(), 3u);
  EXPECT_TRUE(enumerate_by_name("permutation", gl_signature(), 1, 2, 0).diagrams.empty());
  EXPECT_THROW(enumerate_by_name("bogus", gl_signature(), 1, 1, 0), std::invalid_argument);
  EXPECT_THROW(enumerate_brauer(gl_signature(), 1, 1), std::invalid_argument);
}
