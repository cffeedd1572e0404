#include <gtest/gtest.h>

#include <thread>

#include "icat/character.hpp"
#include "icat/enumerate.hpp"
#include "support.hpp"

using namespace icat;
using namespace icat::testing;

namespace {

const Poly t = Poly::variable(0);

Model dual_numbers(const std::vector<Rational>& counit) {
  return frobenius_model({1, 0}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, counit, "k[y]/(y^2)");
}

std::vector<Diagram> connected_samples(const SignaturePtr& sig, int count, int max_boxes, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Diagram> out;
  while (static_cast<int>(out.size()) < count) {
    Diagram d = random_closed(sig, max_boxes, rng);
    if (connected_components(d).size() == 1) out.push_back(d);
  }
  return out;
}

}  // namespace

TEST(Character, ModelCharacterValues) {
  EXPECT_EQ(char_from_model(orth_model(3)).evaluate(Diagram::loop(brauer_signature())), Poly(3));
  Character jordan = char_from_model(endo_model({{0, 1}, {0, 0}}));
  EXPECT_EQ(jordan.evaluate(trace_close(Diagram::generator(endo_signature(), "T"))), Poly(0));
  Character sep = char_from_model(sep_algebra_model(2));
  for (const auto& d : connected_samples(partition_signature(), 10, 6, 1)) EXPECT_EQ(sep.evaluate(d), Poly(2));
}

TEST(Character, ClosedFormPresets) {
  auto psig = partition_signature();
  // Delta = (m (x) id)(id (x) c); the closed handle m o Delta is connected.
  Diagram delta = compose(tensor(Diagram::generator(psig, "m"), Diagram::identity(psig, 1)),
                          tensor(Diagram::identity(psig, 1), Diagram::generator(psig, "c")));
  EXPECT_EQ(sym_character().evaluate(trace_close(compose(Diagram::generator(psig, "m"), delta))), t);
  Diagram two_loops = Diagram::loop(brauer_signature(), 2);
  EXPECT_EQ(orth_character().evaluate(two_loops), t * t);
  EXPECT_EQ(char_from_model(orth_model(4)).evaluate(two_loops), Poly(16));

  Character frob = frobenius_character(AlphaSequence::from_list({0, 2, 0, 0, 0}));
  EXPECT_EQ(frob.evaluate(trace_close(Diagram::identity(frobenius_signature(), 1))), Poly(2));
  EXPECT_EQ(frob.evaluate(trace_close(handle_diagram(frobenius_signature()))), Poly(0));
  Character short_list = frobenius_character(AlphaSequence::from_list({1}));
  EXPECT_THROW(short_list.evaluate(trace_close(handle_diagram(frobenius_signature()))), std::out_of_range);

  Character endo = endo_character({{2, 3}});
  Diagram tt = Diagram::generator(endo_signature(), "T");
  EXPECT_EQ(endo.evaluate(trace_close(power(tt, 3))), Poly(24));
  EXPECT_EQ(endo.evaluate(Diagram::loop(endo_signature())), Poly(3));
  EXPECT_THROW(gl_character().evaluate(trace_close(tt)), std::invalid_argument);
}

TEST(Character, AlphaFromRationalFunction) {
  // 1/(1 - 3X) has coefficients 3^g.
  AlphaSequence a = AlphaSequence::from_rational(UPoly(1), UPoly(std::vector<Rational>{1, -3}));
  EXPECT_EQ(a.prefix(5), (std::vector<Rational>{1, 3, 9, 27, 81}));
  AlphaSequence b = AlphaSequence::from_rational(UPoly(std::vector<Rational>{1, 2}), UPoly(1));
  EXPECT_EQ(b.prefix(4), (std::vector<Rational>{1, 2, 0, 0}));
  EXPECT_THROW(AlphaSequence::from_rational(UPoly(1), UPoly(std::vector<Rational>{0, 1})), std::invalid_argument);
}

TEST(Character, ModelAgreesWithClosedForm) {
  for (int n = 1; n <= 3; ++n) {
    Character model = char_from_model(sep_algebra_model(n));
    for (const auto& d : connected_samples(partition_signature(), 8, 5, 10 + n))
      EXPECT_EQ(model.evaluate(d), sym_character().evaluate(d).evaluate({Rational(n)}));
  }
  for (int n = 1; n <= 3; ++n) {
    Character model = char_from_model(orth_model(n));
    for (const auto& d : enumerate_brauer(brauer_signature(), 2, 2).diagrams) {
      for (const auto& e : enumerate_brauer(brauer_signature(), 2, 2).diagrams) {
        Diagram closed = trace_close(compose(d, e));
        EXPECT_EQ(model.evaluate(closed), orth_character().evaluate(closed).evaluate({Rational(n)}));
      }
    }
  }
  Character frob_model = char_from_model(dual_numbers({1, 1}));
  Character frob_closed = frobenius_character(AlphaSequence::from_list({1, 2, 0, 0, 0, 0, 0, 0, 0}));
  for (const auto& d : connected_samples(frobenius_signature(), 10, 6, 5))
    EXPECT_EQ(frob_model.evaluate(d), frob_closed.evaluate(d));
}

TEST(Character, InterpolationRecoversPolynomials) {
  std::vector<std::pair<Rational, Model>> sym;
  for (int n = 1; n <= 4; ++n) sym.emplace_back(Rational(n), sep_algebra_model(n));
  Character chi = interpolate_family(sym, [](const Diagram&) { return 1; });
  for (const auto& d : connected_samples(partition_signature(), 10, 5, 7)) EXPECT_EQ(chi.evaluate(d), t);

  std::vector<std::pair<Rational, Model>> gl;
  for (int n = 1; n <= 4; ++n) gl.emplace_back(Rational(n), orth_model(n).restrict_to(gl_signature()));
  Character chi_gl = interpolate_family(gl);
  std::vector<int> swap{1, 0};
  EXPECT_EQ(chi_gl.evaluate(trace_close(Diagram::permutation(gl_signature(), swap))), t);
  EXPECT_EQ(chi_gl.evaluate(trace_close(Diagram::identity(gl_signature(), 2))), t * t);

  Character sp = symp_character();
  EXPECT_EQ(sp.evaluate(Diagram::loop(brauer_signature())), t);
}

TEST(Character, InterpolationDiagnostics) {
  std::vector<std::pair<Rational, Model>> two;
  two.emplace_back(Rational(1), sep_algebra_model(1));
  two.emplace_back(Rational(2), sep_algebra_model(2));
  Character chi = interpolate_family(two, [](const Diagram&) { return 5; });
  EXPECT_THROW(chi.evaluate(Diagram::loop(partition_signature())), CharacterError);

  // A degree bound of 0 is too small for t, and the witness catches it.
  Character wrong = interpolate_family(two, [](const Diagram&) { return 0; });
  EXPECT_THROW(wrong.evaluate(Diagram::loop(partition_signature())), CharacterError);

  std::vector<std::pair<Rational, Model>> repeated;
  repeated.emplace_back(Rational(1), sep_algebra_model(1));
  repeated.emplace_back(Rational(1), sep_algebra_model(2));
  EXPECT_THROW(interpolate_family(repeated), std::invalid_argument);
}

TEST(Character, AlgebraOperationsMatchModelConstructions) {
  Model a = sep_algebra_model(2);
  Model b = frobenius_model({1, 0}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}, {1, 0}).restrict_to(partition_signature());
  Character ca = char_from_model(a);
  Character cb = char_from_model(b);
  Character sum = char_add(ca, cb);
  Character prod = char_mul(ca, cb);
  Character direct = char_from_model(direct_sum(a, b));
  Character kron = char_from_model(tensor_product(a, b));
  for (const auto& d : connected_samples(partition_signature(), 20, 5, 21)) {
    EXPECT_EQ(sum.evaluate(d), direct.evaluate(d));
    EXPECT_EQ(prod.evaluate(d), kron.evaluate(d));
    EXPECT_EQ(char_scale(1, cb).evaluate(d), cb.evaluate(d));
  }
  // Addition is pointwise on connected diagrams only.
  Diagram two = Diagram::loop(partition_signature(), 2);
  EXPECT_EQ(sum.evaluate(two), Poly(16));
  EXPECT_THROW(char_add(ca, gl_character()), std::invalid_argument);
}

TEST(Character, ScalingTheUnitFamily) {
  Character s1 = char_from_model(sep_algebra_model(1));
  for (int n = 2; n <= 3; ++n) {
    Character scaled = char_scale(n, s1);
    Character sn = char_from_model(sep_algebra_model(n));
    for (const auto& d : connected_samples(partition_signature(), 10, 5, 30 + n)) EXPECT_EQ(scaled.evaluate(d), sn.evaluate(d));
  }
  Character formal = char_scale(t, s1, {"t"});
  EXPECT_EQ(formal.evaluate(Diagram::loop(partition_signature(), 3)), t.pow(3));
}

TEST(Character, AdditiveFamilies) {
  // chi_{t1} + chi_{t2} = chi_{t1 + t2} on connected keys.
  Character chi = sym_character();
  for (const auto& d : connected_samples(partition_signature(), 10, 5, 40)) {
    const Poly v = chi.connected_value(d);
    EXPECT_EQ(v.evaluate({Rational(2)}) + v.evaluate({Rational(5)}), v.evaluate({Rational(7)}));
  }
}

TEST(Character, SpecializationAndMemo) {
  Character chi = sym_character();
  Character at7 = chi.specialize({Rational(7)});
  Diagram d = trace_close(Diagram::identity(partition_signature(), 3));
  EXPECT_EQ(at7.evaluate(d), Poly(343));
  EXPECT_EQ(chi.evaluate_at(d, {Rational(7)}), 343);
  EXPECT_EQ(chi.memo_size(), 1u);
  EXPECT_EQ(chi.evaluate(d), chi.evaluate(d));
}

TEST(Character, ConcurrentEvaluationIsDeterministic) {
  Character chi = char_from_model(sep_algebra_model(3));
  auto samples = connected_samples(partition_signature(), 30, 6, 50);
  std::vector<Poly> first(samples.size());
  std::vector<Poly> second(samples.size());
  std::thread a([&] {
    for (std::size_t i = 0; i < samples.size(); ++i) first[i] = chi.evaluate(samples[i]);
  });
  std::thread b([&] {
    for (std::size_t i = samples.size(); i-- > 0;) second[i] = chi.evaluate(samples[i]);
  });
  a.join();
  b.join();
  EXPECT_EQ(first, second);
}

TEST(CharacterProperty, MultiplicativeOverComponents) {
  std::mt19937 rng(60);
  Character chi = char_from_model(sep_algebra_model(2));
  Character formal = sym_character();
  for (int trial = 0; trial < 30; ++trial) {
    Diagram a = random_closed(partition_signature(), 4, rng);
    Diagram b = random_closed(partition_signature(), 4, rng);
    EXPECT_EQ(chi.evaluate(tensor(a, b)), chi.evaluate(a) * chi.evaluate(b));
    EXPECT_EQ(formal.evaluate(tensor(a, b)), formal.evaluate(a) * formal.evaluate(b));
  }
}

TEST(Character, DvrExponents) {
  const int r = 2;
  SignaturePtr sig = group_algebra_signature(2, r, true);
  EXPECT_EQ(dvr_generator_name(2, 1), "T11");
  EXPECT_EQ(dvr_generator_name(2, 2), "T10");
  EXPECT_EQ(dvr_generator_name(3, 2), "T101");
  Diagram c1 = trace_close(Diagram::generator(sig, dvr_generator_name(r, 1)));
  Diagram c2 = trace_close(Diagram::generator(sig, dvr_generator_name(r, 2)));
  EXPECT_EQ(dvr_exponents(c1, r), (std::vector<int>{1, 1}));
  EXPECT_EQ(dvr_exponents(c2, r), (std::vector<int>{1, 2}));
  Character chi = dvr_character(r);
  const Poly t1 = Poly::variable(0);
  const Poly t2 = Poly::variable(1);
  EXPECT_EQ(chi.evaluate(c1), t1 * t2);
  EXPECT_EQ(chi.evaluate(Diagram::loop(sig)), t1 * t2 * t2);
  // The antipode fixes 2-torsion only, which depends on the residue field.
  EXPECT_THROW(chi.evaluate(trace_close(Diagram::generator(sig, "S"))), CharacterError);
  for (int q : {2, 3}) {
    Character model = char_from_model(group_algebra_model(q, r, {1, 1}, true));
    EXPECT_EQ(model.evaluate(c1), chi.evaluate_at(c1, {Rational(q), Rational(q)}));
    EXPECT_EQ(model.evaluate(c2), chi.evaluate_at(c2, {Rational(q), Rational(q)}));
  }
}
