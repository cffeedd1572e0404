#include "icat/gram.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace icat {

Poly pair_diagrams(const Diagram& x, const Diagram& y, const Character& chi) {
  if (x.outputs() != y.inputs() || x.inputs() != y.outputs())
    throw std::invalid_argument("pair: arities (" + std::to_string(x.outputs()) + "," + std::to_string(x.inputs()) +
                                ") and (" + std::to_string(y.outputs()) + "," + std::to_string(y.inputs()) +
                                ") are not dual");
  return chi.evaluate(trace_close(compose(x, y)));
}

Poly pair(const LinCombo& x, const LinCombo& y, const Character& chi) {
  Poly total(0);
  for (const auto& [kx, tx] : x.terms())
    for (const auto& [ky, ty] : y.terms()) total += tx.coeff * ty.coeff * pair_diagrams(tx.diagram, ty.diagram, chi);
  return total;
}

Matrix<Poly> gram_entries(const std::vector<Diagram>& rows, const std::vector<Diagram>& cols, const Character& chi) {
  Matrix<Poly> g(rows.size(), std::vector<Poly>(cols.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      try {
        for (std::size_t j = 0; j < cols.size(); ++j) g[i][j] = pair_diagrams(rows[i], cols[j], chi);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = rows.size();
        return;
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>({rows.size(), std::max(1u, std::thread::hardware_concurrency()), 8});
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return g;
}

Matrix<Rational> specialize(const Matrix<Poly>& g, const std::vector<Rational>& point) {
  return map_matrix<Rational>(g, [&](const Poly& x) { return x.evaluate(point); });
}

std::size_t rank_at(const Matrix<Poly>& g, const std::vector<Rational>& point) { return rank(specialize(g, point)); }

namespace {

Matrix<Rational> at(const Matrix<UPoly>& g, const Rational& t) {
  return map_matrix<Rational>(g, [&](const UPoly& x) { return x(t); });
}

int max_degree(const Matrix<UPoly>& g) {
  int d = 0;
  for (const auto& row : g)
    for (const auto& x : row) d = std::max(d, x.degree());
  return d;
}

struct RankSearch {
  std::size_t rank = 0;
  Rational witness;  // a point attaining the rank
};

RankSearch search_rank(const Matrix<UPoly>& g) {
  RankSearch out;
  if (g.empty() || g[0].empty()) return out;
  const std::size_t full = std::min(g.size(), g[0].size());
  const long d = max_degree(g);
  long tried = 0;
  out.witness = 97;
  for (Rational t = 97;; t += 1) {
    const std::size_t r = rank(at(g, t));
    ++tried;
    if (r > out.rank || tried == 1) {
      out.rank = r;
      out.witness = t;
    }
    if (out.rank == full) break;
    if (tried >= static_cast<long>(out.rank + 1) * d + 1) break;
  }
  return out;
}

}  // namespace

std::size_t generic_rank(const Matrix<UPoly>& g) { return search_rank(g).rank; }

RankAnalysis generic_rank_and_exceptionals(const Matrix<UPoly>& g, long max_height) {
  RankAnalysis out;
  const RankSearch found = search_rank(g);
  out.generic_rank = found.rank;
  const std::size_t r = found.rank;
  if (r == 0) {
    out.pivot_minor = UPoly(Rational(1));
    return out;
  }
  // Pivot rows and columns at the witness point span a minor nonzero there.
  const Matrix<Rational> g0 = at(g, found.witness);
  const std::vector<std::size_t> rows = independent_rows(g0);
  Matrix<Rational> sub;
  for (std::size_t i : rows) sub.push_back(g0[i]);
  const std::vector<std::size_t> cols = row_reduce(sub).pivot_cols;
  Matrix<UPoly> minor;
  for (std::size_t i : rows) {
    std::vector<UPoly> row;
    for (std::size_t j : cols) row.push_back(g[i][j]);
    minor.push_back(std::move(row));
  }
  // det(minor) has degree <= r * D; interpolate through that many + 1 points.
  const long points = static_cast<long>(r) * max_degree(g) + 1;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (long k = 0; k < points; ++k) {
    const Rational t = Rational(k) - Rational(points / 2);
    xs.push_back(t);
    ys.push_back(determinant(at(minor, t)));
  }
  out.pivot_minor = interpolate(xs, ys);
  UPoly residual = out.pivot_minor;
  for (const auto& [root, mult] : rational_roots(out.pivot_minor, max_height)) {
    for (int k = 0; k < mult; ++k) residual = exact_div(residual, UPoly::linear_factor(root));
    const std::size_t rk = rank(at(g, root));
    if (rk < r) out.exceptional.push_back({root, rk});
  }
  out.nonrational_locus = residual.degree() > 0;
  return out;
}

namespace {

Matrix<UPoly> univariate(const Matrix<Poly>& g) {
  return map_matrix<UPoly>(g, [](const Poly& x) { return x.to_univariate(); });
}

// Left kernel over Q(t), each vector scaled to coprime polynomial entries.
std::vector<std::vector<Poly>> generic_left_kernel(const Matrix<UPoly>& g) {
  const Matrix<RatFunc> gr = map_matrix<RatFunc>(g, [](const UPoly& x) { return RatFunc(x); });
  std::vector<std::vector<Poly>> out;
  for (const auto& v : left_nullspace(gr)) {
    UPoly den(Rational(1));
    for (const auto& x : v) den = exact_div(den * x.den(), gcd(den, x.den()));
    std::vector<UPoly> nums;
    UPoly content;
    for (const auto& x : v) {
      nums.push_back(exact_div(x.num() * den, x.den()));
      content = gcd(content, nums.back());
    }
    std::vector<Poly> row;
    for (const auto& n : nums) row.push_back(Poly::from_univariate(content.is_zero() ? n : exact_div(n, content)));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<Poly>> numeric_left_kernel(const Matrix<Rational>& g) {
  std::vector<std::vector<Poly>> out;
  for (const auto& v : left_nullspace(g)) {
    std::vector<Poly> row;
    for (const auto& x : v) row.emplace_back(x);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

GramReport gram_report(const SpanningSet& s, const SpanningSet& dual, const Character& chi,
                       const std::vector<Rational>& point, const GramOptions& options) {
  if (s.outputs != dual.inputs || s.inputs != dual.outputs)
    throw std::invalid_argument("gram_report: spanning sets are not dual");
  if (point.empty() && chi.params().size() > 1)
    throw std::invalid_argument("gram_report: a character with several parameters needs a specialization");
  GramReport rep;
  rep.p = s.outputs;
  rep.q = s.inputs;
  rep.method = s.method;
  rep.params = chi.params();
  rep.basis = s.diagrams;
  rep.dual_basis = dual.diagrams;
  rep.point = point;
  rep.entries = gram_entries(s.diagrams, dual.diagrams, chi);
  if (rep.entries.empty() || rep.entries[0].empty()) {
    for (std::size_t i = 0; i < rep.basis.size(); ++i) {
      std::vector<Poly> e(rep.basis.size(), Poly(0));
      e[i] = Poly(1);
      rep.radical_coords.push_back(std::move(e));
    }
  } else if (!point.empty() || chi.params().empty()) {
    const Matrix<Rational> g = specialize(rep.entries, point);
    rep.analysis.generic_rank = rank(g);
    rep.analysis.pivot_minor = UPoly(Rational(1));
    if (options.compute_radical) rep.radical_coords = numeric_left_kernel(g);
  } else {
    const Matrix<UPoly> g = univariate(rep.entries);
    rep.analysis = generic_rank_and_exceptionals(g, options.max_height);
    if (options.compute_radical && rep.analysis.generic_rank < rep.basis.size())
      rep.radical_coords = generic_left_kernel(g);
  }
  for (const auto& coords : rep.radical_coords) {
    LinCombo f(s.sig, s.outputs, s.inputs);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!coords[i].is_zero()) f.add(s.diagrams[i], coords[i]);
    rep.radical_basis.push_back(std::move(f));
  }
  return rep;
}

HomDim hom_dim(int p, int q, const Character& chi, const std::string& method, int max_boxes,
               const std::vector<Rational>& point) {
  if (point.empty() && chi.params().size() > 1)
    throw std::invalid_argument("hom_dim: a character with several parameters needs a specialization");
  auto rank_of = [&](int cutoff) {
    const SpanningSet s = enumerate_by_name(method, chi.signature_ptr(), p, q, cutoff);
    const SpanningSet d = p == q ? s : enumerate_by_name(method, chi.signature_ptr(), q, p, cutoff);
    const Matrix<Poly> g = gram_entries(s.diagrams, d.diagrams, chi);
    if (g.empty() || g[0].empty()) return std::size_t{0};
    if (!point.empty() || chi.params().empty()) return rank_at(g, point);
    return generic_rank(univariate(g));
  };
  HomDim out;
  if (method == "generic" || method == "cobordism") {
    for (int k = 0; k <= max_boxes; ++k) out.history.emplace_back(k, rank_of(k));
    out.saturated = out.history.size() >= 2 && out.history.back().second == out.history[out.history.size() - 2].second;
  } else {
    out.history.emplace_back(max_boxes, rank_of(max_boxes));
    out.saturated = true;
  }
  out.dimension = out.history.back().second;
  return out;
}

}  // namespace icat
