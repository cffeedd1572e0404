#pragma once

// Evidence for goodness of a character: saturation of hom-space ranks and the
// shape of trace generating functions sum_n chi(Tr(T^n)) X^n.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icat/endalg.hpp"
#include "icat/gram.hpp"

namespace icat {

/// Surplus equations required beyond the unknowns before a fit is accepted.
inline constexpr int kFitSurplus = 3;

struct RationalSeriesFit {
  std::vector<Rational> coefficients;
  /// A P/Q with deg Q = L and deg P <= d reproduces every coefficient, and
  /// the number of coefficients is at least L + d + 1 + kFitSurplus.
  bool rational = false;
  /// Coefficients q_1..q_L of Q = 1 + q_1 X + ... + q_L X^L (empty if none found).
  std::vector<Rational> recurrence;
  UPoly p;
  UPoly q;
  bool deg_p_le_deg_q = false;
  bool q_squarefree = false;
  bool q0_nonzero = false;
  /// rational, deg P <= deg Q, Q squarefree, Q(0) != 0.
  bool good = false;
  /// deg P + 1 <= deg Q on top of the good conditions.
  bool loyal_strict = false;
  /// Membership in span{1, X, 1/(1 - lambda X)}: Q squarefree, Q(0) != 0 and
  /// a polynomial part of degree <= 1, i.e. deg P <= deg Q + 1.
  bool loyal = false;
  /// Largest complexity L + d + 1 that was searched.
  int searched_complexity = -1;
  /// Size h and rank of the Hankel matrix (a_{i+j})_{i,j<h}; full rank means
  /// no recurrence of order < h exists at all.
  std::size_t hankel_size = 0;
  std::size_t hankel_rank = 0;
  bool hankel_full_rank() const { return hankel_size > 0 && hankel_rank == hankel_size; }
};

/// Minimal rational reconstruction; throws std::invalid_argument on fewer than 4 terms.
RationalSeriesFit fit_rational(const std::vector<Rational>& series);

/// chi(Tr(T^n)) for n = 0..n_max with T^0 the identity; chi must be numeric.
std::vector<Rational> trace_series(const LinCombo& t, const Character& chi, int n_max);
/// The same series computed inside a quotient algebra from coordinates of T.
std::vector<Rational> trace_series(const std::vector<Rational>& coords, const QuotientAlgebra& a, int n_max);

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);
/// 0 pass, 2 fail, 3 inconclusive (1 is reserved for configuration errors).
int exit_code(Verdict v);

struct LoyalVerdict {
  bool loyal = false;
  RationalSeriesFit fit;
};
/// Fits Z(X) = sum alpha_g X^g and applies the span rule.
LoyalVerdict check_loyal(const std::vector<Rational>& alpha);

struct GoodnessConfig {
  std::vector<std::pair<int, int>> pq_list = {{1, 1}};
  std::string method = "generic";
  int cutoff = 2;
  /// Trace series run over T^0..T^N.
  int n_max = 24;
  int random_count = 16;
  std::uint64_t seed = 1;
  /// Specialization for characters with parameters.
  std::vector<Rational> point;
};

struct SaturationEntry {
  int p = 0;
  int q = 0;
  HomDim dim;
};

struct EndoFit {
  std::string label;  // diagram literal, or "random #k" with its coefficients
  int p = 0;
  bool via_quotient = false;
  std::vector<Rational> series;
  RationalSeriesFit fit;
  Verdict verdict = Verdict::inconclusive;
};

struct GoodnessReport {
  std::vector<SaturationEntry> saturation;
  std::vector<EndoFit> fits;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::inconclusive;
  std::string witness;
  std::uint64_t seed = 0;
};

/// Spanning endomorphisms get exact diagram-power series of length n_max + 1;
/// seeded random combinations are evaluated in the quotient algebra with
/// length max(n_max + 1, 2 dim + 4), enough for any minimal polynomial.
/// Verdict: fail on any series that is rational but not good or whose Hankel
/// matrix has full rank; otherwise pass when every series is good and every
/// (p,q) is saturated; inconclusive otherwise. BudgetExceeded during
/// enumeration also yields inconclusive.
GoodnessReport check_goodness(const Character& chi, const GoodnessConfig& config);

}  // namespace icat
