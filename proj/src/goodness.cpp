#include "icat/goodness.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "icat/diagram_io.hpp"

namespace icat {

// ------------------------------------------------------------ fit_rational

namespace {

// Solves a_n + sum_{k=1}^{L} q_k a_{n-k} = 0 for n = d+1..M-1 (a_j = 0 for j < 0).
std::optional<std::vector<Rational>> recurrence_for(const std::vector<Rational>& a, int l, int d) {
  const int m = static_cast<int>(a.size());
  auto at = [&](int j) { return j < 0 ? Rational(0) : a[j]; };
  if (l == 0) {
    for (int n = d + 1; n < m; ++n)
      if (!is_zero(a[n])) return std::nullopt;
    return std::vector<Rational>{};
  }
  Matrix<Rational> sys;
  std::vector<Rational> rhs;
  for (int n = d + 1; n < m; ++n) {
    std::vector<Rational> row(l);
    for (int k = 1; k <= l; ++k) row[k - 1] = at(n - k);
    sys.push_back(std::move(row));
    rhs.push_back(-a[n]);
  }
  return solve(sys, rhs);
}

}  // namespace

RationalSeriesFit fit_rational(const std::vector<Rational>& series) {
  if (series.size() < 4) throw std::invalid_argument("fit_rational: needs at least 4 coefficients");
  RationalSeriesFit f;
  f.coefficients = series;
  const int m = static_cast<int>(series.size());

  const std::size_t h = (series.size() + 1) / 2;
  Matrix<Rational> hankel(h, std::vector<Rational>(h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) hankel[i][j] = series[i + j];
  f.hankel_size = h;
  f.hankel_rank = rank(hankel);

  // Complexity c = L + d + 1 unknowns; accepted only with kFitSurplus extra equations.
  for (int c = 0; c + kFitSurplus <= m; ++c) {
    f.searched_complexity = c;
    for (int l = 0; l <= c; ++l) {
      const int d = c - 1 - l;
      auto rec = recurrence_for(series, l, d);
      if (!rec) continue;
      std::vector<Rational> qc{Rational(1)};
      qc.insert(qc.end(), rec->begin(), rec->end());
      UPoly q(qc);
      UPoly p = (UPoly(series) * q).truncated(d + 1);
      if (!p.is_zero()) {
        const UPoly g = gcd(p, q);
        p = exact_div(p, g);
        q = exact_div(q, g);
      } else {
        q = UPoly(Rational(1));
      }
      const Rational q0 = q.coeff(0);
      p *= Rational(1) / q0;
      q *= Rational(1) / q0;
      f.rational = true;
      f.p = p;
      f.q = q;
      f.recurrence.assign(q.coeffs().begin() + 1, q.coeffs().end());
      f.deg_p_le_deg_q = p.degree() <= q.degree();
      f.q_squarefree = is_squarefree(q);
      f.q0_nonzero = !is_zero(q.coeff(0));
      f.good = f.deg_p_le_deg_q && f.q_squarefree && f.q0_nonzero;
      f.loyal_strict = f.good && p.degree() + 1 <= q.degree();
      f.loyal = f.q_squarefree && f.q0_nonzero && p.degree() <= q.degree() + 1;
      return f;
    }
  }
  return f;
}

// ------------------------------------------------------------ trace series

namespace {

Rational closed_value(const LinCombo& closed, const Character& chi) {
  Rational s(0);
  for (const auto& [key, term] : closed.terms()) {
    const Poly v = term.coeff * chi.evaluate(term.diagram);
    if (!v.is_constant()) throw std::invalid_argument("trace_series: character must be numeric");
    s += v.constant_value();
  }
  return s;
}

Rational closed_value(const Diagram& closed, const Character& chi) {
  const Poly v = chi.evaluate(closed);
  if (!v.is_constant()) throw std::invalid_argument("trace_series: character must be numeric");
  return v.constant_value();
}

std::vector<Rational> diagram_trace_series(const Diagram& d, const Character& chi, int n_max) {
  std::vector<Rational> out;
  Diagram cur = Diagram::identity(d.signature_ptr(), d.outputs());
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(closed_value(trace_close(cur), chi));
    if (n < n_max) cur = compose(d, cur);
  }
  return out;
}

}  // namespace

std::vector<Rational> trace_series(const LinCombo& t, const Character& chi, int n_max) {
  if (t.outputs() != t.inputs()) throw std::invalid_argument("trace_series: T is not an endomorphism");
  std::vector<Rational> out;
  LinCombo cur(Diagram::identity(t.signature_ptr(), t.outputs()));
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(closed_value(trace_close(cur), chi));
    if (n < n_max) cur = compose(t, cur);
  }
  return out;
}

std::vector<Rational> trace_series(const std::vector<Rational>& coords, const QuotientAlgebra& a, int n_max) {
  std::vector<Rational> out;
  std::vector<Rational> y = a.algebra.unit;
  for (int n = 0; n <= n_max; ++n) {
    Rational s(0);
    for (std::size_t i = 0; i < a.dim(); ++i) s += y[i] * a.trace[i];
    out.push_back(s);
    if (n < n_max) y = a.algebra.multiply(y, coords);
  }
  return out;
}

// ------------------------------------------------------------ verdicts

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return 0;
    case Verdict::fail:
      return 2;
    case Verdict::inconclusive:
      return 3;
  }
  return 3;
}

LoyalVerdict check_loyal(const std::vector<Rational>& alpha) {
  LoyalVerdict v;
  v.fit = fit_rational(alpha);
  v.loyal = v.fit.rational && v.fit.loyal;
  return v;
}

namespace {

Verdict classify(const RationalSeriesFit& f) {
  if (f.rational) return f.good ? Verdict::pass : Verdict::fail;
  return f.hankel_full_rank() ? Verdict::fail : Verdict::inconclusive;
}

std::string describe_failure(const EndoFit& e) {
  std::ostringstream os;
  os << e.label << " at p=" << e.p << ": ";
  const RationalSeriesFit& f = e.fit;
  if (!f.rational) {
    os << "no linear recurrence of order < " << f.hankel_size << " (Hankel matrix of size " << f.hankel_size
       << " has full rank over " << f.coefficients.size() << " terms)";
  } else {
    os << "trace series " << f.p.to_string("X") << " / (" << f.q.to_string("X") << ")";
    if (!f.deg_p_le_deg_q) os << "; deg P > deg Q";
    if (!f.q_squarefree) os << "; Q is not squarefree";
    if (!f.q0_nonzero) os << "; Q(0) = 0";
  }
  return os.str();
}

}  // namespace

GoodnessReport check_goodness(const Character& chi, const GoodnessConfig& config) {
  if (!chi.params().empty() && config.point.size() != chi.params().size())
    throw std::invalid_argument("check_goodness: a specialization point is required for each parameter");
  if (config.n_max < 3) throw std::invalid_argument("check_goodness: N must be at least 3");
  GoodnessReport r;
  r.seed = config.seed;
  const Character numeric = config.point.empty() ? chi : chi.specialize(config.point);

  bool saturated = true;
  try {
    for (const auto& [p, q] : config.pq_list) {
      SaturationEntry e{p, q, hom_dim(p, q, chi, config.method, config.cutoff, config.point)};
      saturated &= e.dim.saturated;
      r.saturation.push_back(std::move(e));
    }

    std::set<int> square;
    for (const auto& [p, q] : config.pq_list)
      if (p == q) square.insert(p);
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int p : square) {
      const SpanningSet s = enumerate_by_name(config.method, chi.signature_ptr(), p, p, config.cutoff);
      for (const Diagram& d : s.diagrams) {
        EndoFit e;
        e.label = format_diagram(d);
        e.p = p;
        e.series = diagram_trace_series(d, numeric, config.n_max);
        e.fit = fit_rational(e.series);
        e.verdict = classify(e.fit);
        r.fits.push_back(std::move(e));
      }
      const QuotientAlgebra a = quotient_algebra(s, numeric);
      if (a.dim() == 0) continue;
      for (const auto& w : a.warnings) r.notes.push_back("p=" + std::to_string(p) + ": " + w);
      const int len = std::max(config.n_max, static_cast<int>(2 * a.dim() + 3));
      for (int k = 0; k < config.random_count; ++k) {
        LinCombo t(s.sig, p, p);
        std::ostringstream label;
        label << "random #" << k << " [";
        for (std::size_t i = 0; i < s.diagrams.size(); ++i) {
          const int c = coeff(rng);
          label << (i ? "," : "") << c;
          if (c != 0) t.add(s.diagrams[i], Poly(c));
        }
        label << "]";
        EndoFit e;
        e.label = label.str();
        e.p = p;
        e.via_quotient = true;
        e.series = trace_series(a.coordinates(t), a, len);
        e.fit = fit_rational(e.series);
        e.verdict = a.warnings.empty() ? classify(e.fit) : Verdict::inconclusive;
        r.fits.push_back(std::move(e));
      }
    }
  } catch (const BudgetExceeded& ex) {
    r.notes.push_back(std::string("budget exceeded: ") + ex.what());
    r.verdict = Verdict::inconclusive;
    r.witness = ex.what();
    return r;
  }

  bool all_pass = saturated;
  for (const auto& e : r.fits) {
    if (e.verdict == Verdict::fail) {
      r.verdict = Verdict::fail;
      r.witness = describe_failure(e);
      return r;
    }
    all_pass &= e.verdict == Verdict::pass;
  }
  r.verdict = all_pass ? Verdict::pass : Verdict::inconclusive;
  if (!saturated) {
    for (const auto& e : r.saturation)
      if (!e.dim.saturated)
        r.notes.push_back("hom(" + std::to_string(e.p) + "," + std::to_string(e.q) + ") not saturated at cutoff " +
                          std::to_string(config.cutoff));
  }
  return r;
}

}  // namespace icat
