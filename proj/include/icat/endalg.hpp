#pragma once

// Endomorphism algebras End(W^p) modulo the radical of the trace pairing, at
// a numeric specialization: structure constants, semisimplicity via the
// regular trace form, and block counts via the center.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icat/character.hpp"
#include "icat/gram.hpp"

namespace icat {

/// Structure constants: mult[i][j][l] is the coefficient of e_l in e_i e_j.
struct FiniteAlgebra {
  std::size_t dim = 0;
  std::vector<std::vector<std::vector<Rational>>> mult;
  std::vector<Rational> unit;

  std::vector<Rational> multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
  /// (i, j) entry tr(L_{e_i} L_{e_j}) of the regular representation.
  Matrix<Rational> regular_trace_gram() const;
  /// Checks (e_i e_j) e_k = e_i (e_j e_k) for all i, j, k < bound.
  bool is_associative(std::size_t bound = 64) const;
  /// Checks unit * e_i = e_i * unit = e_i.
  bool unit_acts_trivially() const;
};

struct SemisimplicityVerdict {
  bool semisimple = false;
  Rational determinant;
  /// Nonzero radical element (coordinates) when not semisimple.
  std::vector<Rational> witness;
};

/// Over Q an algebra is semisimple iff its regular trace form is nondegenerate.
SemisimplicityVerdict is_semisimple(const FiniteAlgebra& a);
std::size_t center_dimension(const FiniteAlgebra& a);
/// Number of simple blocks over the algebraic closure; throws
/// std::invalid_argument when the algebra is not semisimple.
std::size_t simple_count(const FiniteAlgebra& a);

struct QuotientAlgebra {
  int p = 0;
  std::string method;
  int cutoff = 0;
  std::optional<Character> chi;  // numeric
  std::vector<Diagram> spanning;
  Matrix<Rational> gram;                // of the spanning set
  std::vector<std::size_t> basis_index; // into spanning
  std::vector<std::size_t> pivot_cols;  // spanning elements whose pairings fix coordinates
  Matrix<Rational> coord_map;           // inverse transpose of gram[basis_index][pivot_cols]
  FiniteAlgebra algebra;
  std::vector<Rational> trace;  // chi(Tr(b_i))
  /// Set when a product leaves the span of the spanning set modulo the
  /// radical; coordinates are then projected on the pivot columns.
  std::vector<std::string> warnings;

  std::size_t dim() const { return algebra.dim; }
  const Diagram& basis(std::size_t i) const { return spanning[basis_index[i]]; }
  /// Coordinates of f modulo the radical, determined by pairing f against
  /// the spanning set. Coefficients must be constants. Sets `exact` to false
  /// when f is outside the span; the result is then a projection.
  std::vector<Rational> coordinates(const LinCombo& f, bool* exact = nullptr) const;
};

/// Builds the quotient of the (p,p) span of `method` at the given cutoff. The
/// character must be numeric after substituting `point`.
QuotientAlgebra quotient_algebra(int p, const Character& chi, const std::string& method, int cutoff,
                                 const std::vector<Rational>& point = {});
/// Same construction from an explicit spanning set of square arity.
QuotientAlgebra quotient_algebra(const SpanningSet& s, const Character& numeric_chi);

struct NilpotentVerdict {
  enum class Outcome { pass, fail, inconclusive };
  Outcome outcome = Outcome::inconclusive;
  int r = 0;  // least r with T^r negligible; 0 when none up to r_max
  Rational trace;
};

/// Finds the least r <= r_max with T^r in the radical and, if found, checks
/// chi(Tr(T)) = 0.
NilpotentVerdict nilpotent_trace_check(const LinCombo& t, const QuotientAlgebra& a, int r_max);
std::string to_string(NilpotentVerdict::Outcome o);

struct GenericProbe {
  std::vector<Rational> points;
  std::vector<std::size_t> dims;
  std::vector<bool> semisimple;
  std::vector<std::size_t> simple_counts;  // 0 when not semisimple
  bool agree = false;
};

/// Builds the quotient at one seeded random point of height >= 1000 and two
/// further seeded points, and requires dimension, semisimplicity and block
/// count to agree. Heuristic: a point can hit an exceptional value, which
/// shows up as disagreement.
GenericProbe probe_generic(int p, const Character& chi, const std::string& method, int cutoff, std::uint64_t seed);

}  // namespace icat
