#pragma once

// Characters of invariants: polynomial-valued functions on closed connected
// diagrams, extended multiplicatively over components.

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "icat/diagram.hpp"
#include "icat/polynomial.hpp"
#include "icat/realize.hpp"

namespace icat {

/// Upper bound on the parameter degree of a connected value.
using DegreeBound = std::function<int(const Diagram& connected)>;

/// Default bound: the number of wires (a closed value never has more loops).
int wires_degree_bound(const Diagram& connected);

/// Raised when an interpolated value disagrees with a witness point, or a
/// monomiality certificate fails.
class CharacterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Character {
 public:
  /// Value on a closed connected diagram, polynomial in the parameters x_0..x_{k-1}.
  using Rule = std::function<Poly(const Diagram& connected)>;

  Character(SignaturePtr sig, std::vector<std::string> params, Rule rule, DegreeBound bound, std::string provenance);

  const Signature& signature() const { return *sig_; }
  const SignaturePtr& signature_ptr() const { return sig_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::string& provenance() const { return provenance_; }

  /// Memoized by closed_diagram_key; throws std::invalid_argument on a
  /// foreign signature or a diagram that is open or disconnected.
  Poly connected_value(const Diagram& connected) const;
  /// Product of the component values; the empty diagram has value 1.
  Poly evaluate(const Diagram& closed) const;
  /// Value with the parameters substituted; `point` must cover every parameter.
  Rational evaluate_at(const Diagram& closed, const std::vector<Rational>& point) const;
  int degree_bound(const Diagram& connected) const { return bound_(connected); }
  /// Numeric character obtained by substituting all parameters.
  Character specialize(const std::vector<Rational>& point) const;
  std::size_t memo_size() const;

 private:
  struct Memo;
  SignaturePtr sig_;
  std::vector<std::string> params_;
  Rule rule_;
  DegreeBound bound_;
  std::string provenance_;
  std::shared_ptr<Memo> memo_;
};

/// Genus-indexed surface values alpha_0, alpha_1, ...
class AlphaSequence {
 public:
  /// Finite list; asking beyond it throws std::out_of_range.
  static AlphaSequence from_list(std::vector<Rational> values);
  /// Taylor coefficients of P/Q, Q(0) != 0.
  static AlphaSequence from_rational(const UPoly& p, const UPoly& q);

  Rational at(int genus) const;
  std::vector<Rational> prefix(int n) const;
  std::size_t known() const { return values_->size(); }

 private:
  std::shared_ptr<std::vector<Rational>> values_;
  UPoly p_;
  UPoly q_;
  bool rational_ = false;
};

Character char_from_model(const Model& model);

/// Every connected closed diagram (only free loops exist) is t.
Character gl_character();
/// Every connected closed Brauer diagram is a single cycle, value t.
Character orth_character();
/// Every connected closed partition diagram has value t.
Character sym_character();
/// Connected genus-g surface has value alpha_g.
Character frobenius_character(const AlphaSequence& alpha);
/// trace_close(T^i) has value sum_j t_j lambda_j^i; pairs are (lambda_j, t_j).
Character endo_character(const std::vector<std::pair<Rational, Rational>>& eigen);
/// Interpolation of the symplectic models at even points 2, 4, ..., 12.
Character symp_character();
/// Monomial character prod_j t_j^{e_j} over group_algebra_signature(q, r, true);
/// exponents come from dvr_exponents.
Character dvr_character(int r);

/// Exponents e_j with value q^{e_j} on the module Z/q^j, computed for q = 2
/// and q = 3 and required to agree; throws CharacterError with the diagram
/// literal when they do not or when a value is not a power of q.
std::vector<int> dvr_exponents(const Diagram& connected, int r);
/// Name of T_{1 + pi^i} in group_algebra_signature(q, r, true); i >= r gives the identity.
std::string dvr_generator_name(int r, int i);

/// One-parameter family through (point, model) pairs. Each connected value is
/// the Lagrange interpolant through the first bound+1 points; every further
/// point must agree. Throws std::invalid_argument on repeated points or
/// mismatched signatures; evaluation throws CharacterError on too few points
/// or a witness mismatch.
Character interpolate_family(std::vector<std::pair<Rational, Model>> models, DegreeBound bound = wires_degree_bound);

/// Pointwise operations on connected values; signatures must agree and the
/// parameter lists must coincide or one of them must be empty.
Character char_add(const Character& a, const Character& b);
Character char_mul(const Character& a, const Character& b);
/// s * chi on connected values. `params` names the variables of s when chi has none.
Character char_scale(const Poly& s, const Character& chi, std::vector<std::string> params = {});

}  // namespace icat
