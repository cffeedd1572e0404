#pragma once

// Formal linear combinations of diagrams with polynomial coefficients in the
// signature's parameters, i.e. elements of Con^{p,q} (x) Q[params].

#include <map>
#include <string>

#include "icat/diagram.hpp"
#include "icat/polynomial.hpp"

namespace icat {

class LinCombo {
 public:
  struct Term {
    Diagram diagram;
    Poly coeff;
  };

  /// The zero morphism of arity (p, q).
  LinCombo(SignaturePtr sig, int outputs, int inputs);
  /// A single diagram with coefficient one.
  explicit LinCombo(const Diagram& d);

  const SignaturePtr& signature_ptr() const { return sig_; }
  int outputs() const { return outputs_; }
  int inputs() const { return inputs_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Terms keyed by canonical key; never holds a zero coefficient.
  const std::map<std::string, Term>& terms() const { return terms_; }

  /// Adds coeff * d; throws std::invalid_argument on arity mismatch.
  void add(const Diagram& d, const Poly& coeff);
  LinCombo& operator+=(const LinCombo& other);
  LinCombo& operator*=(const Poly& scalar);

  friend LinCombo operator+(LinCombo a, const LinCombo& b) { return a += b; }
  friend LinCombo operator-(LinCombo a, const LinCombo& b) { return a += b * Poly(-1); }
  friend LinCombo operator*(LinCombo a, const Poly& s) { return a *= s; }
  friend LinCombo operator*(const Poly& s, LinCombo a) { return a *= s; }
  friend bool operator==(const LinCombo& a, const LinCombo& b);

 private:
  SignaturePtr sig_;
  int outputs_;
  int inputs_;
  std::map<std::string, Term> terms_;
};

/// Bilinear extensions of the diagram operations.
LinCombo compose(const LinCombo& g, const LinCombo& f);
LinCombo tensor(const LinCombo& f, const LinCombo& g);
LinCombo trace_close(const LinCombo& f);
LinCombo power(const LinCombo& f, int n);

}  // namespace icat
