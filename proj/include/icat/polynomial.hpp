#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icat/rational.hpp"

namespace icat {

/// Dense univariate polynomial over Q, coefficients stored low degree first
/// with no trailing zeros (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  UPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly monomial(int degree, Rational coeff = 1);
  /// The polynomial X - root.
  static UPoly linear_factor(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  Rational operator()(const Rational& x) const;

  UPoly derivative() const;
  UPoly monic() const;
  /// Multiplies through by the lcm of denominators and divides by the content.
  UPoly primitive() const;
  /// Truncates to terms of degree < n.
  UPoly truncated(int n) const;

  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  UPoly& operator*=(const UPoly& other);
  UPoly& operator*=(const Rational& scalar);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator-(UPoly a) { return a *= Rational(-1); }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Exact division; throws std::domain_error when b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
bool is_squarefree(const UPoly& p);

/// Newton interpolation through (x_i, y_i); the x_i must be distinct.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Rational roots p/q with |p| <= max_height and 1 <= q <= max_height, each
/// listed with its multiplicity, ascending.
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p, long max_height = 100);

/// Sparse multivariate polynomial over Q in variables x_0, x_1, ...; exponent
/// vectors are stored with trailing zeros trimmed, so constants use {}.
class Poly {
 public:
  using Monomial = std::vector<unsigned>;

  Poly() = default;
  Poly(Rational constant);  // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static Poly variable(std::size_t index);
  static Poly from_univariate(const UPoly& p, std::size_t var = 0);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; throws std::logic_error otherwise.
  Rational constant_value() const;
  /// Number of variables actually occurring (1 + highest index used).
  std::size_t num_vars() const;
  int total_degree() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational evaluate(const std::vector<Rational>& point) const;
  /// Substitutes values for a subset of the variables; nullopt leaves the variable free.
  Poly substitute(const std::vector<std::optional<Rational>>& values) const;
  /// Converts a polynomial in at most x_0 to a UPoly; throws std::logic_error otherwise.
  UPoly to_univariate() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(Poly a) { return Poly(0) - a; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned n) const;

  /// Human-readable form, e.g. "t^2 - 3/2*t + 1"; variable names default to x0, x1, ...
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(Monomial m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

}  // namespace icat
