#include "icat/presets.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "icat/diagram_io.hpp"
#include "icat/goodness.hpp"

namespace icat {

namespace {

std::optional<long> as_natural(const Rational& x) {
  if (x.get_den() != 1 || sgn(x) < 0 || !x.get_num().fits_slong_p()) return std::nullopt;
  return x.get_num().get_si();
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

std::size_t double_factorial_odd(int n) {  // (n-1)!! for even n
  std::size_t f = 1;
  for (int k = n - 1; k > 1; k -= 2) f *= static_cast<std::size_t>(k);
  return f;
}

std::size_t bell(int n) {
  std::vector<std::vector<std::size_t>> tri{{1}};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::size_t> row{tri.back().back()};
    for (std::size_t k = 0; k < tri.back().size(); ++k) row.push_back(row.back() + tri.back()[k]);
    tri.push_back(std::move(row));
  }
  return tri[static_cast<std::size_t>(n)].front();
}

std::vector<ExpectedDim> brauer_dims() {
  std::vector<ExpectedDim> out;
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; p + q <= 6; ++q)
      if ((p + q) % 2 == 0 && p + q > 0) out.push_back({p, q, double_factorial_odd(p + q)});
  return out;
}

std::vector<std::vector<Rational>> naturals(int from, int to, int step = 1) {
  std::vector<std::vector<Rational>> out;
  for (int n = from; n <= to; n += step) out.push_back({Rational(n)});
  return out;
}

std::vector<std::string> indexed_params(std::size_t k) {
  if (k == 1) return {"t"};
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= k; ++j) out.push_back("t" + std::to_string(j));
  return out;
}

}  // namespace

std::vector<std::string> preset_names() { return {"gl", "endo", "orth", "symp", "sym", "frobenius", "wreath", "dvr"}; }

PresetBundle preset(const std::string& name, const PresetOptions& o) {
  if (name == "gl") return gl_preset();
  if (name == "endo") return endo_preset(o.lambdas);
  if (name == "orth") return orth_preset();
  if (name == "symp") return symp_preset();
  if (name == "sym") return sym_preset();
  if (name == "frobenius") {
    if (o.alpha) return frobenius_preset(*o.alpha);
    const Model m = frobenius_model_by_name(o.frobenius_model);
    return frobenius_preset(model_alpha_sequence(m), m);
  }
  if (name == "wreath") return wreath_preset(o.wreath_base ? *o.wreath_base : trivial_model());
  if (name == "dvr") return dvr_preset(o.r);
  throw std::invalid_argument("unknown preset '" + name + "'");
}

PresetBundle gl_preset() {
  PresetBundle b("gl", gl_signature(), "permutation", 0, gl_character());
  b.special_description = "0, 1, 2, 3, ... (models K^n for n >= 1)";
  b.special_sample = naturals(1, 5);
  b.model_at = [sig = b.sig](const std::vector<Rational>& pt) -> std::optional<Model> {
    const auto n = as_natural(pt.at(0));
    if (!n || *n < 1 || *n > 64) return std::nullopt;
    return Model(sig, static_cast<int>(*n), {}, "K^" + std::to_string(*n));
  };
  for (int p = 1; p <= 4; ++p) b.expected_dims.push_back({p, p, factorial(p)});
  b.expected_exceptional = {{2, 2, Rational(-1), 1}, {2, 2, Rational(0), 0}, {2, 2, Rational(1), 1}};
  return b;
}

PresetBundle endo_preset(const std::vector<Rational>& lambdas) {
  if (lambdas.empty()) throw std::invalid_argument("endo preset needs at least one eigenvalue");
  std::set<Rational> distinct(lambdas.begin(), lambdas.end());
  if (distinct.size() != lambdas.size()) throw std::invalid_argument("endo preset: eigenvalues must be distinct");
  const std::vector<std::string> params = indexed_params(lambdas.size());
  std::string desc = "tuples of naturals (t_j = multiplicity of eigenvalue";
  for (std::size_t j = 0; j < lambdas.size(); ++j) desc += (j ? ", " : " ") + to_string(lambdas[j]);
  desc += ")";
  Character chi(
      endo_signature(), params,
      [lambdas](const Diagram& d) {
        const int i = d.count("T");
        Poly v;
        for (std::size_t j = 0; j < lambdas.size(); ++j) {
          Rational power(1);
          for (int k = 0; k < i; ++k) power *= lambdas[j];
          v += Poly::variable(j) * Poly(power);
        }
        return v;
      },
      [](const Diagram&) { return 1; }, "closed_form:endo");
  PresetBundle b("endo", endo_signature(), "generic", 3, chi);
  b.special_description = desc;
  b.model_at = [lambdas](const std::vector<Rational>& pt) -> std::optional<Model> {
    std::vector<Rational> diag;
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      const auto n = as_natural(pt.at(j));
      if (!n || *n > 32) return std::nullopt;
      for (long k = 0; k < *n; ++k) diag.push_back(lambdas[j]);
    }
    if (diag.empty()) return std::nullopt;
    Matrix<Rational> t(diag.size(), std::vector<Rational>(diag.size(), Rational(0)));
    for (std::size_t i = 0; i < diag.size(); ++i) t[i][i] = diag[i];
    return endo_model(t);
  };
  for (int n = 1; n <= 3; ++n) b.special_sample.push_back(std::vector<Rational>(lambdas.size(), Rational(n)));
  return b;
}

PresetBundle orth_preset() {
  PresetBundle b("orth", brauer_signature(), "brauer", 0, orth_character());
  b.special_description = "1, 2, 3, ... (K^n with the standard form)";
  b.special_sample = naturals(1, 4);
  b.model_at = [](const std::vector<Rational>& pt) -> std::optional<Model> {
    const auto n = as_natural(pt.at(0));
    if (!n || *n < 1 || *n > 32) return std::nullopt;
    return orth_model(static_cast<int>(*n));
  };
  b.expected_dims = brauer_dims();
  b.expected_exceptional = {{2, 2, Rational(-2), 2}, {2, 2, Rational(0), 0}, {2, 2, Rational(1), 1}};
  return b;
}

PresetBundle symp_preset() {
  PresetBundle b("symp", brauer_signature(), "brauer", 0, symp_character());
  b.special_description = "2, 4, 6, ... (K^{2n} with the standard symplectic form)";
  b.special_sample = naturals(2, 6, 2);
  b.model_at = [](const std::vector<Rational>& pt) -> std::optional<Model> {
    const auto n = as_natural(pt.at(0));
    if (!n || *n < 2 || *n % 2 != 0 || *n > 32) return std::nullopt;
    return symp_model(static_cast<int>(*n));
  };
  b.expected_dims = brauer_dims();
  return b;
}

PresetBundle sym_preset() {
  PresetBundle b("sym", partition_signature(), "partition", 0, sym_character());
  b.special_description = "0, 1, 2, 3, ... (K^n as the algebra of functions on n points, n >= 1)";
  b.special_sample = naturals(1, 5);
  b.model_at = [](const std::vector<Rational>& pt) -> std::optional<Model> {
    const auto n = as_natural(pt.at(0));
    if (!n || *n < 1 || *n > 32) return std::nullopt;
    return sep_algebra_model(static_cast<int>(*n));
  };
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; p + q <= 4; ++q) b.expected_dims.push_back({p, q, bell(p + q)});
  b.expected_exceptional = {{1, 1, Rational(0), 0}, {1, 1, Rational(1), 1}};
  return b;
}

PresetBundle frobenius_preset(const AlphaSequence& alpha, std::optional<Model> model) {
  PresetBundle b("frobenius", frobenius_signature(), "cobordism", 2, frobenius_character(alpha));
  b.special_description = model ? "the model " + model->name() : "none (surface values only)";
  if (model) {
    b.special_sample.push_back({});
    b.model_at = [model](const std::vector<Rational>&) -> std::optional<Model> {
      return model->restrict_to(frobenius_signature());
    };
  } else {
    b.model_at = [](const std::vector<Rational>&) -> std::optional<Model> { return std::nullopt; };
  }
  return b;
}

PresetBundle wreath_preset(const Model& base) {
  WreathBar w = wreath_bar(base);
  PresetBundle b("wreath", w.sig, "generic", 3, w.scaled);
  b.special_description = "1, 2, 3, ... (n copies of 1 + A over " + base.name() + ")";
  b.special_sample = naturals(1, 3);
  b.model_at = [bar = wreath_bar_model(base)](const std::vector<Rational>& pt) -> std::optional<Model> {
    const auto n = as_natural(pt.at(0));
    if (!n || *n < 1 || *n * bar.dim() > 16) return std::nullopt;
    Model sum = bar;
    for (long k = 1; k < *n; ++k) sum = direct_sum(sum, bar);
    return sum;
  };
  return b;
}

PresetBundle dvr_preset(int r) {
  Character chi = dvr_character(r);
  PresetBundle b("dvr", chi.signature_ptr(), "generic", 2, chi);
  b.special_description = "(q^{a_1}, ..., q^{a_r}) for q in {2, 3} and naturals a_j (modules over Z/q^r)";
  b.model_at = [r](const std::vector<Rational>& pt) -> std::optional<Model> {
    if (pt.size() != static_cast<std::size_t>(r)) return std::nullopt;
    for (int q : {2, 3}) {
      std::vector<int> a;
      long order = 1;
      bool ok = true;
      for (int j = 0; j < r && ok; ++j) {
        auto n = as_natural(pt[static_cast<std::size_t>(j)]);
        int e = 0;
        ok = n && *n >= 1;
        while (ok && *n % q == 0) {
          *n /= q;
          ++e;
        }
        ok = ok && *n == 1;
        a.push_back(e);
        for (int k = 0; ok && k < e * (j + 1); ++k) order *= q;
      }
      if (ok && order <= 4096) return group_algebra_model(q, r, a, true);
    }
    return std::nullopt;
  };
  for (int q : {2, 3}) {
    for (int j = 0; j < r; ++j) {
      std::vector<Rational> pt(static_cast<std::size_t>(r), Rational(1));
      pt[static_cast<std::size_t>(j)] = q;
      b.special_sample.push_back(pt);
    }
    if (r > 1) b.special_sample.push_back(std::vector<Rational>(static_cast<std::size_t>(r), Rational(q)));
  }
  return b;
}

// ---------------------------------------------------------------- Frobenius

Model frobenius_line_model(const Rational& lambda) {
  if (is_zero(lambda)) throw std::invalid_argument("frobenius_line_model: lambda must be nonzero");
  return frobenius_model({1}, {{{1}}}, {Rational(1) / lambda}, "K(eps=1/" + to_string(lambda) + ")");
}

Model dual_numbers_model(const std::vector<Rational>& counit) {
  return frobenius_model({1, 0}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, counit,
                         "k[y]/(y^2)(eps=" + to_string(counit.at(0)) + "," + to_string(counit.at(1)) + ")");
}

Model frobenius_model_by_name(const std::string& name) {
  if (name == "dual_eps1") return dual_numbers_model({0, 1});
  if (name == "dual_eps2") return dual_numbers_model({1, 1});
  if (name.rfind("line:", 0) == 0) return frobenius_line_model(parse_rational(name.substr(5)));
  throw std::invalid_argument("unknown Frobenius model '" + name + "' (expected line:<lambda>, dual_eps1, dual_eps2)");
}

std::vector<Rational> model_alpha(const Model& model, int n) {
  const SignaturePtr sig = frobenius_signature();
  const Model m = model.restrict_to(sig);
  const Diagram u = Diagram::generator(sig, "u");
  const Diagram eps = Diagram::generator(sig, "eps");
  const Diagram x = handle_diagram(sig);
  std::vector<Rational> out;
  Diagram cur = u;
  for (int g = 0; g < n; ++g) {
    out.push_back(evaluate_closed(compose(eps, cur), m));
    cur = compose(x, cur);
  }
  return out;
}

AlphaSequence model_alpha_sequence(const Model& model) {
  // The handle element satisfies its characteristic polynomial, so 2 dim + 4
  // terms determine Z(X) with the fit surplus to spare.
  const std::vector<Rational> a = model_alpha(model, 2 * model.dim() + 6);
  const RationalSeriesFit f = fit_rational(a);
  if (!f.rational) return AlphaSequence::from_list(a);
  return AlphaSequence::from_rational(f.p, f.q);
}

// ------------------------------------------------------------------- wreath

Model trivial_model() { return Model(make_signature({}), 1, {}, "trivial"); }

WreathBar wreath_bar(const Model& base) {
  const Model bar = wreath_bar_model(base);
  Character chi = char_from_model(bar);
  Character scaled = char_scale(Poly::variable(0), chi, {"t"});
  return {bar.signature_ptr(), chi, scaled};
}

// ----------------------------------------------------------------- sampling

std::vector<Diagram> sample_connected_closed(const PresetBundle& b, std::size_t count, std::uint64_t seed,
                                             const std::vector<std::string>& exclude) {
  auto allowed = [&](const Diagram& d) {
    for (const auto& name : exclude)
      if (d.signature().find(name) && d.count(name) > 0) return false;
    return true;
  };
  std::vector<std::vector<Diagram>> pools;
  for (int p : {1, 2}) {
    if (b.method == "generic" && p == 2) continue;
    const SpanningSet s = enumerate_by_name(b.method, b.sig, p, p, std::min(b.cutoff, 2));
    std::vector<Diagram> pool;
    for (const auto& d : s.diagrams)
      if (allowed(d)) pool.push_back(d);
    if (!pool.empty()) pools.push_back(std::move(pool));
  }
  std::vector<Diagram> out{Diagram::loop(b.sig)};
  std::set<std::string> seen{closed_diagram_key(out.front())};
  if (pools.empty()) return out;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 400 && out.size() < count; ++attempt) {
    const auto& pool = pools[std::uniform_int_distribution<std::size_t>(0, pools.size() - 1)(rng)];
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    // Words lengthen as attempts accumulate so that small families still
    // produce distinct diagrams.
    const int len = std::uniform_int_distribution<int>(1, 3 + attempt / 20)(rng);
    Diagram d = pool[pick(rng)];
    for (int k = 1; k < len; ++k) d = compose(pool[pick(rng)], d);
    for (const Diagram& c : connected_components(trace_close(d))) {
      if (out.size() >= count) break;
      if (seen.insert(closed_diagram_key(c)).second) out.push_back(c);
    }
  }
  return out;
}

std::vector<Diagram> dvr_trace_sample(const PresetBundle& dvr) {
  std::vector<Diagram> out{Diagram::loop(dvr.sig)};
  for (const Generator& g : dvr.sig->generators())
    if (g.name.size() > 1 && g.name[0] == 'T') out.push_back(trace_close(Diagram::generator(dvr.sig, g.name)));
  return out;
}

AgreementResult check_model_agreement(const PresetBundle& b, const std::vector<Rational>& point,
                                      const std::vector<Diagram>& diagrams) {
  AgreementResult r;
  r.point = point;
  const std::optional<Model> m = b.model_at ? b.model_at(point) : std::nullopt;
  if (!m) throw std::invalid_argument("check_model_agreement: no model at this point");
  for (const Diagram& d : diagrams) {
    ++r.checked;
    if (b.character.evaluate_at(d, point) != evaluate_closed(d, *m)) r.mismatches.push_back(format_diagram(d));
  }
  return r;
}

}  // namespace icat
