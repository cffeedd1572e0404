#pragma once

// Bundled example families: signature, enumerator, closed-form character,
// model family on the special collection, and expected tables.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icat/character.hpp"
#include "icat/enumerate.hpp"
#include "icat/realize.hpp"

namespace icat {

struct ExpectedDim {
  int p = 0;
  int q = 0;
  std::size_t dim = 0;
};

struct ExpectedExceptional {
  int p = 0;
  int q = 0;
  Rational value;
  std::size_t rank = 0;
};

struct PresetBundle {
  PresetBundle(std::string name_, SignaturePtr sig_, std::string method_, int cutoff_, Character character_)
      : name(std::move(name_)),
        sig(std::move(sig_)),
        method(std::move(method_)),
        cutoff(cutoff_),
        params(character_.params()),
        character(std::move(character_)) {}

  std::string name;
  SignaturePtr sig;
  std::string method;  // enumerator name
  int cutoff = 0;      // default cutoff for cutoff-dependent enumerators
  std::vector<std::string> params;
  Character character;
  /// Model realizing the character at a point of the special collection;
  /// nullopt elsewhere.
  std::function<std::optional<Model>(const std::vector<Rational>&)> model_at;
  std::string special_description;
  /// Finite sample of the special collection used for agreement checks.
  std::vector<std::vector<Rational>> special_sample;
  std::vector<ExpectedDim> expected_dims;  // generic hom dimensions
  std::vector<ExpectedExceptional> expected_exceptional;
};

struct PresetOptions {
  int r = 2;                                 // dvr length
  std::vector<Rational> lambdas = {2};       // endo eigenvalues, one parameter t_j each
  std::optional<AlphaSequence> alpha;        // frobenius surface values
  std::string frobenius_model = "dual_eps2"; // used when alpha is absent
  std::optional<Model> wreath_base;          // defaults to the trivial 1-dimensional structure
};

/// Names accepted by preset().
std::vector<std::string> preset_names();
/// Throws std::invalid_argument on an unknown name or invalid options.
PresetBundle preset(const std::string& name, const PresetOptions& options = {});

PresetBundle gl_preset();
/// Character sum_j t_j lambda_j^i on trace_close(T^i), one parameter per eigenvalue.
PresetBundle endo_preset(const std::vector<Rational>& lambdas);
PresetBundle orth_preset();
PresetBundle symp_preset();
PresetBundle sym_preset();
PresetBundle frobenius_preset(const AlphaSequence& alpha, std::optional<Model> model = std::nullopt);
PresetBundle wreath_preset(const Model& base);
PresetBundle dvr_preset(int r);

/// K with unit 1 and eps(1) = 1/lambda; Z(X) = (1/lambda)/(1 - lambda X).
Model frobenius_line_model(const Rational& lambda);
/// k[y]/(y^2) with eps(1) = counit[0] and eps(y) = counit[1].
Model dual_numbers_model(const std::vector<Rational>& counit);
/// Frobenius model by name: "line:<lambda>", "dual_eps1" (eps = y^*), "dual_eps2" (eps = 1^* + y^*).
Model frobenius_model_by_name(const std::string& name);
/// alpha_0..alpha_{n-1}: values of the closed genus-g surfaces on a Frobenius model.
std::vector<Rational> model_alpha(const Model& model, int n);
/// Surface values of a model, exact as a rational generating function.
AlphaSequence model_alpha_sequence(const Model& model);

/// The trivial 1-dimensional structure with no generators.
Model trivial_model();
struct WreathBar {
  SignaturePtr sig;
  Character bar;     // numeric, from wreath_bar_model(base)
  Character scaled;  // t * bar, parameter t
};
/// Throws std::invalid_argument on a generator name clash with the new generators.
WreathBar wreath_bar(const Model& base);

/// Connected closed diagrams sampled from traces of composites of the
/// preset's spanning diagrams (arities (1,1) and (2,2)), deduplicated by key.
/// Returns fewer than `count` when the family has fewer distinct diagrams
/// within the sampling budget. Generators named in `exclude` are avoided.
std::vector<Diagram> sample_connected_closed(const PresetBundle& b, std::size_t count, std::uint64_t seed,
                                             const std::vector<std::string>& exclude = {});

/// The free loop and trace_close(T_x) for every binary-digit generator T_x:
/// the closed diagrams on which the DVR character is monomial for every prime.
std::vector<Diagram> dvr_trace_sample(const PresetBundle& dvr);

struct AgreementResult {
  std::vector<Rational> point;
  std::size_t checked = 0;
  std::vector<std::string> mismatches;  // diagram literals
  bool ok() const { return checked > 0 && mismatches.empty(); }
};
/// Compares the closed-form character at `point` with the model at `point`.
AgreementResult check_model_agreement(const PresetBundle& b, const std::vector<Rational>& point,
                                      const std::vector<Diagram>& diagrams);

}  // namespace icat
