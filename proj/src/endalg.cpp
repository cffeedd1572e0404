#include "icat/endalg.hpp"

#include <random>

namespace icat {

// ------------------------------------------------------------ FiniteAlgebra

std::vector<Rational> FiniteAlgebra::multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  std::vector<Rational> out(dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (is_zero(y[j])) continue;
      const Rational c = x[i] * y[j];
      for (std::size_t l = 0; l < dim; ++l)
        if (!is_zero(mult[i][j][l])) out[l] += c * mult[i][j][l];
    }
  }
  return out;
}

Matrix<Rational> FiniteAlgebra::regular_trace_gram() const {
  // tr(L_i L_j) = sum_{l,m} C[i][m][l] C[j][l][m].
  Matrix<Rational> g(dim, std::vector<Rational>(dim, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      Rational s(0);
      for (std::size_t l = 0; l < dim; ++l)
        for (std::size_t m = 0; m < dim; ++m)
          if (!is_zero(mult[i][m][l]) && !is_zero(mult[j][l][m])) s += mult[i][m][l] * mult[j][l][m];
      g[i][j] = s;
      g[j][i] = s;
    }
  }
  return g;
}

namespace {

std::vector<Rational> basis_vector(std::size_t dim, std::size_t i) {
  std::vector<Rational> e(dim, Rational(0));
  e[i] = 1;
  return e;
}

}  // namespace

bool FiniteAlgebra::is_associative(std::size_t bound) const {
  const std::size_t n = std::min(bound, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (multiply(mult[i][j], basis_vector(dim, k)) != multiply(basis_vector(dim, i), mult[j][k])) return false;
  return true;
}

bool FiniteAlgebra::unit_acts_trivially() const {
  for (std::size_t i = 0; i < dim; ++i) {
    const auto e = basis_vector(dim, i);
    if (multiply(unit, e) != e || multiply(e, unit) != e) return false;
  }
  return true;
}

SemisimplicityVerdict is_semisimple(const FiniteAlgebra& a) {
  SemisimplicityVerdict v;
  const Matrix<Rational> g = a.regular_trace_gram();
  v.determinant = a.dim == 0 ? Rational(1) : determinant(g);
  v.semisimple = !is_zero(v.determinant);
  if (!v.semisimple) v.witness = nullspace(g, a.dim).front();
  return v;
}

std::size_t center_dimension(const FiniteAlgebra& a) {
  // z = sum z_i e_i is central iff sum_i z_i (C[i][k][l] - C[k][i][l]) = 0 for all k, l.
  Matrix<Rational> sys;
  for (std::size_t k = 0; k < a.dim; ++k) {
    for (std::size_t l = 0; l < a.dim; ++l) {
      std::vector<Rational> row(a.dim);
      bool nonzero = false;
      for (std::size_t i = 0; i < a.dim; ++i) {
        row[i] = a.mult[i][k][l] - a.mult[k][i][l];
        nonzero |= !is_zero(row[i]);
      }
      if (nonzero) sys.push_back(std::move(row));
    }
  }
  return a.dim - rank(sys);
}

std::size_t simple_count(const FiniteAlgebra& a) {
  if (!is_semisimple(a).semisimple) throw std::invalid_argument("simple_count: algebra is not semisimple");
  return center_dimension(a);
}

// ---------------------------------------------------------- QuotientAlgebra

namespace {

// Coordinates x with x^T G_B = v, computed from the pivot columns.
std::vector<Rational> solve_coordinates(const QuotientAlgebra& a, const std::vector<Rational>& v, bool* exact) {
  const std::size_t r = a.basis_index.size();
  std::vector<Rational> x(r, Rational(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) x[i] += a.coord_map[i][k] * v[a.pivot_cols[k]];
  if (exact) {
    *exact = true;
    for (std::size_t c = 0; c < v.size() && *exact; ++c) {
      Rational s(0);
      for (std::size_t i = 0; i < r; ++i) s += x[i] * a.gram[a.basis_index[i]][c];
      *exact = s == v[c];
    }
  }
  return x;
}

}  // namespace

std::vector<Rational> QuotientAlgebra::coordinates(const LinCombo& f, bool* exact) const {
  std::vector<Rational> v(spanning.size(), Rational(0));
  for (const auto& [key, term] : f.terms()) {
    if (!term.coeff.is_constant()) throw std::invalid_argument("coordinates: coefficients must be constants");
    const Rational c = term.coeff.constant_value();
    for (std::size_t k = 0; k < spanning.size(); ++k)
      v[k] += c * pair_diagrams(term.diagram, spanning[k], *chi).constant_value();
  }
  return solve_coordinates(*this, v, exact);
}

QuotientAlgebra quotient_algebra(const SpanningSet& s, const Character& numeric_chi) {
  if (s.outputs != s.inputs) throw std::invalid_argument("quotient_algebra: spanning set is not square");
  if (!numeric_chi.params().empty()) throw std::invalid_argument("quotient_algebra: character must be numeric");
  QuotientAlgebra a;
  a.p = s.outputs;
  a.method = s.method;
  a.cutoff = s.max_boxes;
  a.chi = numeric_chi;
  a.spanning = s.diagrams;
  a.gram = specialize(gram_entries(s.diagrams, s.diagrams, numeric_chi), {});
  if (s.diagrams.empty()) return a;
  a.basis_index = independent_rows(a.gram);
  const std::size_t r = a.basis_index.size();
  a.algebra.dim = r;
  if (r == 0) return a;
  Matrix<Rational> rows;
  for (std::size_t i : a.basis_index) rows.push_back(a.gram[i]);
  a.pivot_cols = row_reduce(rows).pivot_cols;
  Matrix<Rational> minor(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) minor[i][k] = rows[i][a.pivot_cols[k]];
  a.coord_map = inverse(transpose(minor));

  std::vector<Diagram> products;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) products.push_back(compose(a.basis(i), a.basis(j)));
  const Matrix<Rational> pv = specialize(gram_entries(products, a.spanning, numeric_chi), {});
  a.algebra.mult.assign(r, std::vector<std::vector<Rational>>(r));
  std::size_t inexact = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      bool exact = true;
      a.algebra.mult[i][j] = solve_coordinates(a, pv[i * r + j], &exact);
      if (!exact) ++inexact;
    }
  }
  if (inexact)
    a.warnings.push_back(std::to_string(inexact) +
                         " basis products leave the span modulo the radical; raise the cutoff for saturation");

  const Diagram id = Diagram::identity(s.sig, s.outputs);
  bool unit_exact = true;
  a.algebra.unit = a.coordinates(LinCombo(id), &unit_exact);
  if (!unit_exact) a.warnings.push_back("the identity is outside the span modulo the radical");
  for (std::size_t i = 0; i < r; ++i) a.trace.push_back(numeric_chi.evaluate(trace_close(a.basis(i))).constant_value());
  return a;
}

QuotientAlgebra quotient_algebra(int p, const Character& chi, const std::string& method, int cutoff,
                                 const std::vector<Rational>& point) {
  const Character numeric = point.empty() ? chi : chi.specialize(point);
  return quotient_algebra(enumerate_by_name(method, chi.signature_ptr(), p, p, cutoff), numeric);
}

NilpotentVerdict nilpotent_trace_check(const LinCombo& t, const QuotientAlgebra& a, int r_max) {
  if (t.outputs() != t.inputs()) throw std::invalid_argument("nilpotent_trace_check: T is not an endomorphism");
  NilpotentVerdict v;
  for (const auto& [key, term] : t.terms())
    v.trace += term.coeff.constant_value() * a.chi->evaluate(trace_close(term.diagram)).constant_value();
  bool exact = true;
  const std::vector<Rational> x = a.coordinates(t, &exact);
  if (!exact) return v;
  auto is_null = [](const std::vector<Rational>& y) {
    for (const auto& c : y)
      if (!is_zero(c)) return false;
    return true;
  };
  std::vector<Rational> y = x;
  for (int r = 1; r <= r_max; ++r) {
    if (is_null(y)) {
      v.r = r;
      v.outcome = is_zero(v.trace) ? NilpotentVerdict::Outcome::pass : NilpotentVerdict::Outcome::fail;
      return v;
    }
    y = a.algebra.multiply(y, x);
  }
  return v;
}

std::string to_string(NilpotentVerdict::Outcome o) {
  switch (o) {
    case NilpotentVerdict::Outcome::pass:
      return "pass";
    case NilpotentVerdict::Outcome::fail:
      return "fail";
    case NilpotentVerdict::Outcome::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

GenericProbe probe_generic(int p, const Character& chi, const std::string& method, int cutoff, std::uint64_t seed) {
  if (chi.params().size() != 1) throw std::invalid_argument("probe_generic: needs a one-parameter character");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000);
  GenericProbe out;
  while (out.points.size() < 3) {
    const Rational x = Rational(num(rng)) / den(rng);
    if (height(x) < 1000) continue;
    bool fresh = true;
    for (const auto& y : out.points) fresh &= y != x;
    if (fresh) out.points.push_back(x);
  }
  const SpanningSet s = enumerate_by_name(method, chi.signature_ptr(), p, p, cutoff);
  for (const auto& x : out.points) {
    const QuotientAlgebra a = quotient_algebra(s, chi.specialize({x}));
    const bool ss = is_semisimple(a.algebra).semisimple;
    out.dims.push_back(a.dim());
    out.semisimple.push_back(ss);
    out.simple_counts.push_back(ss ? center_dimension(a.algebra) : 0);
  }
  out.agree = true;
  for (std::size_t i = 1; i < 3; ++i)
    out.agree &= out.dims[i] == out.dims[0] && out.semisimple[i] == out.semisimple[0] &&
                 out.simple_counts[i] == out.simple_counts[0];
  return out;
}

}  // namespace icat
