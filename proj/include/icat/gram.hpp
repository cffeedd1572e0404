#pragma once

// The trace pairing between (p,q) and (q,p) morphisms under a character, its
// Gram matrices, generic ranks, exceptional parameter values and radicals.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icat/character.hpp"
#include "icat/enumerate.hpp"
#include "icat/linalg.hpp"
#include "icat/lincombo.hpp"

namespace icat {

/// chi(trace_close(x o y)) for x of arity (p,q) and y of arity (q,p).
Poly pair_diagrams(const Diagram& x, const Diagram& y, const Character& chi);
/// Bilinear extension; coefficients share the character's parameter variables.
Poly pair(const LinCombo& x, const LinCombo& y, const Character& chi);

/// Entry (i, j) pairs rows[i] with cols[j]. Rows are evaluated in parallel.
Matrix<Poly> gram_entries(const std::vector<Diagram>& rows, const std::vector<Diagram>& cols, const Character& chi);

/// Rank at a parameter point (empty point for constant matrices).
std::size_t rank_at(const Matrix<Poly>& g, const std::vector<Rational>& point);
Matrix<Rational> specialize(const Matrix<Poly>& g, const std::vector<Rational>& point);

struct ExceptionalValue {
  Rational value;
  std::size_t rank = 0;
  friend bool operator==(const ExceptionalValue&, const ExceptionalValue&) = default;
};

struct RankAnalysis {
  std::size_t generic_rank = 0;
  /// Every rational t of height <= max_height where the rank drops, ascending.
  std::vector<ExceptionalValue> exceptional;
  /// A nonzero generic_rank-minor; the rank can only drop at its roots.
  UPoly pivot_minor;
  /// The pivot minor has roots outside the searched rationals. Such points
  /// are candidates only: other minors may stay nonzero there.
  bool nonrational_locus = false;
};

/// Rank over Q(t) by evaluation at t = 97, 98, ...; see below for the stopping rule.
std::size_t generic_rank(const Matrix<UPoly>& g);

/// Generic rank over Q(t) by evaluation: with D the largest entry degree, a
/// nonzero (r+1)-minor has degree <= (r+1)D, so (r+1)D+1 points without a
/// rank above r certify rank r. Exceptional candidates are the rational roots
/// of the pivot minor, each confirmed by an exact rank.
RankAnalysis generic_rank_and_exceptionals(const Matrix<UPoly>& g, long max_height = 100);

struct GramReport {
  int p = 0;
  int q = 0;
  std::string method;
  std::vector<std::string> params;
  std::vector<Diagram> basis;       // arity (p,q)
  std::vector<Diagram> dual_basis;  // arity (q,p)
  Matrix<Poly> entries;
  /// Empty for a generic report; otherwise the specialization used.
  std::vector<Rational> point;
  RankAnalysis analysis;
  /// Basis of {sum c_i basis_i : pairs to zero with every dual_basis element}
  /// over Q(t) cleared to polynomial coefficients, or over Q at `point`.
  std::vector<LinCombo> radical_basis;
  std::vector<std::vector<Poly>> radical_coords;
  std::size_t rank() const { return analysis.generic_rank; }
};

struct GramOptions {
  long max_height = 100;
  bool compute_radical = true;
};

/// Gram report for a spanning set and its dual. A character with more than one
/// parameter needs a point. Throws std::invalid_argument on arity mismatch.
GramReport gram_report(const SpanningSet& s, const SpanningSet& dual, const Character& chi,
                       const std::vector<Rational>& point = {}, const GramOptions& options = {});

struct HomDim {
  std::size_t dimension = 0;
  /// Complete spanning sets are saturated by construction; cutoff-dependent
  /// ones are saturated when the last two cutoffs give the same rank.
  bool saturated = false;
  std::vector<std::pair<int, std::size_t>> history;  // (max_boxes, rank)
};

/// Dimension of the (p,q) hom-space of the quotient category. `method` names
/// an enumerator; the generic and cobordism ones, whose sets grow with the
/// cutoff, are run at every cutoff 0..max_boxes.
HomDim hom_dim(int p, int q, const Character& chi, const std::string& method, int max_boxes,
               const std::vector<Rational>& point = {});

}  // namespace icat
