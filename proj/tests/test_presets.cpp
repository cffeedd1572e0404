#include <gtest/gtest.h>

#include "icat/goodness.hpp"
#include "icat/gram.hpp"
#include "icat/presets.hpp"

using namespace icat;

TEST(Presets, NamesResolve) {
  for (const auto& name : preset_names()) {
    PresetBundle b = preset(name);
    EXPECT_EQ(b.name, name);
    EXPECT_EQ(b.params, b.character.params());
  }
  EXPECT_THROW(preset("nope"), std::invalid_argument);
  EXPECT_THROW(preset("dvr", PresetOptions{.r = 4}), std::invalid_argument);
}

TEST(Presets, SpecialCollections) {
  EXPECT_NE(gl_preset().special_description.find("0, 1, 2, 3"), std::string::npos);
  PresetBundle sp = symp_preset();
  for (const auto& pt : sp.special_sample) EXPECT_TRUE(pt[0].get_den() == 1 && pt[0].get_num() % 2 == 0);
  EXPECT_FALSE(sp.model_at({Rational(3)}).has_value());
  EXPECT_TRUE(sp.model_at({Rational(4)}).has_value());
}

TEST(Presets, ClosedFormsAgreeWithModels) {
  for (const auto& name : {"gl", "orth", "symp", "sym", "endo", "frobenius", "wreath", "dvr"}) {
    PresetBundle b = preset(name);
    const std::vector<Diagram> sample = b.name == "dvr" ? dvr_trace_sample(b) : sample_connected_closed(b, 20, 5);
    ASSERT_FALSE(sample.empty()) << name;
    for (const auto& pt : b.special_sample) {
      AgreementResult r = check_model_agreement(b, pt, sample);
      EXPECT_TRUE(r.ok()) << name << ": " << (r.mismatches.empty() ? "" : r.mismatches.front());
    }
  }
}

TEST(Presets, SampleSizes) {
  EXPECT_EQ(sample_connected_closed(sym_preset(), 20, 1).size(), 20u);
  EXPECT_GE(sample_connected_closed(orth_preset(), 20, 1).size(), 3u);  // cycles of c and d only
  EXPECT_EQ(sample_connected_closed(gl_preset(), 20, 1).size(), 1u);  // only the free loop
}

TEST(Presets, ExpectedGenericDimensions) {
  for (const auto& name : {"gl", "orth", "sym"}) {
    PresetBundle b = preset(name);
    for (const auto& e : b.expected_dims) {
      if (e.p + e.q > 4 && name != std::string("orth")) continue;
      EXPECT_EQ(hom_dim(e.p, e.q, b.character, b.method, b.cutoff).dimension, e.dim)
          << name << " (" << e.p << "," << e.q << ")";
    }
  }
}

TEST(Presets, ExpectedExceptionalValues) {
  for (const auto& name : {"gl", "orth", "sym"}) {
    PresetBundle b = preset(name);
    for (const auto& e : b.expected_exceptional) {
      const SpanningSet s = enumerate_by_name(b.method, b.sig, e.p, e.q, b.cutoff);
      const SpanningSet d = enumerate_by_name(b.method, b.sig, e.q, e.p, b.cutoff);
      EXPECT_EQ(rank_at(gram_entries(s.diagrams, d.diagrams, b.character), {e.value}), e.rank)
          << name << " at " << to_string(e.value);
    }
  }
}

TEST(Presets, FrobenusSurfaceValues) {
  const Rational lambda(3);
  EXPECT_EQ(model_alpha(frobenius_line_model(lambda), 4),
            (std::vector<Rational>{Rational(1) / 3, 1, 3, 9}));
  EXPECT_EQ(model_alpha(dual_numbers_model({0, 1}), 4), (std::vector<Rational>{0, 2, 0, 0}));
  EXPECT_EQ(model_alpha(dual_numbers_model({1, 1}), 4), (std::vector<Rational>{1, 2, 0, 0}));
  AlphaSequence a = model_alpha_sequence(dual_numbers_model({1, 1}));
  EXPECT_EQ(a.at(40), 0);
  EXPECT_THROW(frobenius_model_by_name("cube"), std::invalid_argument);
}

TEST(Presets, WreathBarValues) {
  const Model base = endo_model({{2}});
  WreathBar w = wreath_bar(base);
  const Diagram p = Diagram::generator(w.sig, "P");
  EXPECT_EQ(w.bar.evaluate(trace_close(p)), Poly(1));
  EXPECT_EQ(w.bar.evaluate(trace_close(Diagram::identity(w.sig, 1))), Poly(base.dim() + 1));
  EXPECT_EQ(w.scaled.evaluate_at(trace_close(p), {Rational(5)}), 5);
  EXPECT_THROW(wreath_bar(orth_model(2)), std::invalid_argument);  // "c" clashes
}

TEST(Presets, DvrAgainstGroupAlgebra) {
  PresetBundle b = dvr_preset(2);
  const Diagram t1 = trace_close(Diagram::generator(b.sig, dvr_generator_name(2, 1)));
  const Diagram t2 = trace_close(Diagram::generator(b.sig, dvr_generator_name(2, 2)));
  const Diagram loop = Diagram::loop(b.sig);
  const Poly x1 = Poly::variable(0);
  const Poly x2 = Poly::variable(1);
  EXPECT_EQ(b.character.evaluate(t1), x1 * x2);
  EXPECT_EQ(b.character.evaluate(t2), x1 * x2 * x2);
  EXPECT_EQ(b.character.evaluate(loop), x1 * x2 * x2);
  // (a_1, a_2) = (1, 1) is the point (t_1, t_2) = (2, 2).
  const Model m = group_algebra_model(2, 2, {1, 1}, true);
  for (const Diagram& d : {t1, t2, loop})
    EXPECT_EQ(b.character.evaluate_at(d, {Rational(2), Rational(2)}), evaluate_closed(d, m));
}

TEST(Presets, DvrProductsOfGeneratorsAreNotMonomial) {
  // (1 + pi)^2 = 1 + 2 pi + pi^2 depends on the residue characteristic.
  PresetBundle b = dvr_preset(2);
  const Diagram t = Diagram::generator(b.sig, dvr_generator_name(2, 1));
  EXPECT_THROW(b.character.evaluate(trace_close(compose(t, t))), CharacterError);
  EXPECT_EQ(dvr_trace_sample(b).size(), 5u);
}

TEST(Presets, DvrRankOneIsMultiplicative) {
  PresetBundle b = dvr_preset(1);
  for (const Diagram& d : dvr_trace_sample(b)) {
    const Rational s(3);
    const Rational t(7);
    EXPECT_EQ(b.character.evaluate_at(d, {s}) * b.character.evaluate_at(d, {t}), b.character.evaluate_at(d, {s * t}));
  }
}

TEST(Presets, EndoTraceSeriesAndGoodness) {
  PresetBundle b = endo_preset({Rational(2)});
  const Character u2 = b.character.specialize({Rational(3)});
  const LinCombo t(Diagram::generator(b.sig, "T"));
  EXPECT_EQ(trace_series(t, u2, 3), (std::vector<Rational>{3, 6, 12, 24}));

  GoodnessConfig c;
  c.method = "generic";
  c.cutoff = 3;
  c.n_max = 10;
  c.point = {Rational(3)};
  EXPECT_EQ(check_goodness(b.character, c).verdict, Verdict::pass);

  const Character u3 = endo_preset({Rational(3)}).character.specialize({Rational(1)});
  const Character prod = char_mul(b.character.specialize({Rational(1)}), u3);
  RationalSeriesFit f = fit_rational(trace_series(t, prod, 6));
  EXPECT_EQ(f.q, UPoly(std::vector<Rational>{1, -6}));
  c.point = {};
  EXPECT_EQ(check_goodness(prod, c).verdict, Verdict::pass);
}
