#pragma once

// Concrete models in Vec_Q and the realization maps: a diagram becomes the
// contraction of its generators' tensors along its wires.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "icat/diagram.hpp"
#include "icat/lincombo.hpp"
#include "icat/linalg.hpp"
#include "icat/rational.hpp"

namespace icat {

/// Dense tensor of shape dim^(outputs + inputs), row-major with the output
/// indices first.
struct DenseTensor {
  int dim = 1;
  int outputs = 0;
  int inputs = 0;
  std::vector<Rational> data;

  std::size_t rows() const;
  std::size_t cols() const;
  /// Entry at (output multi-index, input multi-index) flattened as row * cols() + col.
  const Rational& at(std::size_t row, std::size_t col) const { return data[row * cols() + col]; }
  Matrix<Rational> matrix() const;
  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;
};

class Model {
 public:
  /// One flat tensor per generator of `sig`, of length dim^(p+q). Throws
  /// std::invalid_argument on a missing or extra generator, wrong length, or dim < 1.
  Model(SignaturePtr sig, int dim, std::map<std::string, std::vector<Rational>> tensors, std::string name = {});

  const Signature& signature() const { return *sig_; }
  const SignaturePtr& signature_ptr() const { return sig_; }
  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<Rational>& tensor(std::size_t generator) const { return tensors_.at(generator); }
  const std::vector<Rational>& tensor(std::string_view name) const { return tensors_.at(sig_->index_of(name)); }

  /// The same structure seen through a sub-signature; every generator of
  /// `sub` must exist here with the same arity.
  Model restrict_to(SignaturePtr sub) const;

 private:
  SignaturePtr sig_;
  int dim_;
  std::vector<std::vector<Rational>> tensors_;
  std::string name_;
};

DenseTensor realize(const Diagram& d, const Model& model);
/// Parameters are substituted into the coefficients; throws
/// std::invalid_argument when a coefficient uses a parameter with no value.
DenseTensor realize(const LinCombo& f, const Model& model, const std::vector<Rational>& params = {});
/// Product of the component values of a closed diagram.
Rational evaluate_closed(const Diagram& closed, const Model& model);
/// Rank of the span of the realized diagrams.
std::size_t realized_rank(const std::vector<Diagram>& diagrams, const Model& model);

/// K^n with pointwise product m, unit u = (1,...,1) and copairing c = sum e_i (x) e_i.
Model sep_algebra_model(int n);
/// K^n with c = sum e^i (x) e^i and d = sum e_i (x) e_i.
Model orth_model(int n);
/// K^{2n} with the standard symplectic form; throws on odd dimension.
Model symp_model(int dim);
/// Frobenius algebra from a unit vector, structure constants
/// mult[i][j][k] = coefficient of e_k in e_i e_j, and a counit vector. The
/// copairing is the inverse of the Gram matrix eps(e_i e_j); throws when it is singular.
Model frobenius_model(const std::vector<Rational>& unit, const std::vector<std::vector<std::vector<Rational>>>& mult,
                      const std::vector<Rational>& counit, std::string name = "frobenius");
/// A single endomorphism T given as a square matrix (row = output index).
Model endo_model(const Matrix<Rational>& t);
/// The group algebra of M = (+)_i (Z/q^i)^{a_i} with m, Delta, u, eps, S and
/// T_x(U_m) = U_{xm} for every x in Z/q^r (q prime). Throws when |M| > 4096.
Model group_algebra_model(int q, int r, const std::vector<int>& a, bool binary_only = false);
/// The structure (1 (+) A, y_1..y_k, P, u, eps, m, c) built over `base`;
/// index 0 is the unit summand and base tensors vanish on it.
Model wreath_bar_model(const Model& base);
/// The same construction with A = 0, i.e. the structure on 1 alone.
Model wreath_bar_over_zero(const SignaturePtr& base_sig);
/// Signature of the wreath construction over `base_sig`; throws on name clashes.
SignaturePtr wreath_bar_signature(const SignaturePtr& base_sig);
/// Block-diagonal sum of two models over the same signature.
Model direct_sum(const Model& a, const Model& b);
/// Kronecker product of two models over the same signature.
Model tensor_product(const Model& a, const Model& b);

}  // namespace icat
