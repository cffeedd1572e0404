#include "icat/realize.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace icat {

namespace {

constexpr std::size_t kMaxEntries = std::size_t{1} << 27;

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kMaxEntries / base)
      throw std::length_error("dense tensor of dimension " + std::to_string(base) + "^" + std::to_string(exp) +
                              " exceeds the size limit");
    r *= base;
  }
  return r;
}

/// Row-major digits of `flat` in base d, most significant first.
void decode(std::size_t flat, int d, std::vector<int>& digits) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    digits[k] = static_cast<int>(flat % static_cast<std::size_t>(d));
    flat /= static_cast<std::size_t>(d);
  }
}

std::size_t encode(const std::vector<int>& digits, int d) {
  std::size_t flat = 0;
  for (int x : digits) flat = flat * static_cast<std::size_t>(d) + static_cast<std::size_t>(x);
  return flat;
}

/// A tensor over distinct wire variables, each of range d.
struct Factor {
  std::vector<int> vars;
  std::vector<Rational> data;
  std::size_t nonzeros() const {
    return static_cast<std::size_t>(std::count_if(data.begin(), data.end(), [](const Rational& x) { return !is_zero(x); }));
  }
};

/// Restricts a tensor whose legs carry possibly repeated variables to the diagonal.
Factor diagonal_factor(const std::vector<int>& legs, const std::vector<Rational>& data, int d) {
  Factor f;
  std::vector<int> slot(legs.size());
  for (std::size_t i = 0; i < legs.size(); ++i) {
    auto it = std::find(f.vars.begin(), f.vars.end(), legs[i]);
    slot[i] = static_cast<int>(it - f.vars.begin());
    if (it == f.vars.end()) f.vars.push_back(legs[i]);
  }
  if (f.vars.size() == legs.size()) {
    f.data = data;
    return f;
  }
  const std::size_t n = checked_pow(static_cast<std::size_t>(d), f.vars.size());
  f.data.assign(n, Rational(0));
  std::vector<int> vals(f.vars.size());
  std::vector<int> full(legs.size());
  for (std::size_t flat = 0; flat < n; ++flat) {
    decode(flat, d, vals);
    for (std::size_t i = 0; i < legs.size(); ++i) full[i] = vals[static_cast<std::size_t>(slot[i])];
    f.data[flat] = data[encode(full, d)];
  }
  return f;
}

/// Multiplies the factors and sums out every variable not in `keep`.
/// Iterates only over nonzero entries, factor by factor, sparsest first.
Factor contract(std::vector<const Factor*> fs, const std::vector<int>& keep, int d, std::vector<int>& val) {
  std::sort(fs.begin(), fs.end(), [](const Factor* a, const Factor* b) { return a->nonzeros() < b->nonzeros(); });
  Factor out;
  out.vars = keep;
  out.data.assign(checked_pow(static_cast<std::size_t>(d), keep.size()), Rational(0));

  // Variables first assigned by each factor.
  std::vector<std::vector<std::size_t>> fresh(fs.size());
  std::set<int> assigned;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    for (std::size_t pos = 0; pos < fs[k]->vars.size(); ++pos) {
      if (assigned.insert(fs[k]->vars[pos]).second) fresh[k].push_back(pos);
    }
  }
  for (int v : keep) {
    if (!assigned.count(v)) throw std::logic_error("contract: kept variable appears in no factor");
  }

  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t k, const Rational& prod) {
    if (k == fs.size()) {
      std::size_t idx = 0;
      for (int v : keep) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(val[static_cast<std::size_t>(v)]);
      out.data[idx] += prod;
      return;
    }
    const Factor& f = *fs[k];
    const auto& nv = fresh[k];
    const std::size_t combos = checked_pow(static_cast<std::size_t>(d), nv.size());
    for (std::size_t c = 0; c < combos; ++c) {
      std::size_t rest = c;
      for (std::size_t i = nv.size(); i-- > 0;) {
        val[static_cast<std::size_t>(f.vars[nv[i]])] = static_cast<int>(rest % static_cast<std::size_t>(d));
        rest /= static_cast<std::size_t>(d);
      }
      std::size_t flat = 0;
      for (int v : f.vars) flat = flat * static_cast<std::size_t>(d) + static_cast<std::size_t>(val[static_cast<std::size_t>(v)]);
      const Rational& x = f.data[flat];
      if (is_zero(x)) continue;
      rec(k + 1, prod * x);
    }
  };
  rec(0, Rational(1));
  return out;
}

/// Contracts a diagram to a factor over its distinct boundary variables.
/// `legs` receives the variable of each open output then each open input.
Factor contract_diagram(const Diagram& dg, const Model& model, std::vector<int>& legs) {
  const int d = model.dim();
  std::vector<Factor> live;
  for (int b = 0; b < static_cast<int>(dg.num_boxes()); ++b) {
    const Generator& g = dg.box_generator(b);
    std::vector<int> box_legs;
    for (int k = 0; k < g.outputs; ++k) box_legs.push_back(dg.source_id(Source::box_output(b, k)));
    for (int j = 0; j < g.inputs; ++j) box_legs.push_back(dg.source_of(dg.sink_id(Sink::box_input(b, j))));
    live.push_back(diagonal_factor(box_legs, model.tensor(dg.boxes()[static_cast<std::size_t>(b)]), d));
  }
  legs.clear();
  for (int i = 0; i < dg.outputs(); ++i) legs.push_back(dg.source_of(i));
  for (int j = 0; j < dg.inputs(); ++j) legs.push_back(j);
  const std::set<int> free(legs.begin(), legs.end());

  std::vector<int> val(static_cast<std::size_t>(dg.num_sources()), 0);
  for (;;) {
    // Greedy: eliminate the bound variable whose contraction result is smallest.
    std::map<int, std::set<int>> neighbourhood;
    for (const Factor& f : live) {
      for (int v : f.vars) {
        if (free.count(v)) continue;
        auto& nb = neighbourhood[v];
        nb.insert(f.vars.begin(), f.vars.end());
      }
    }
    if (neighbourhood.empty()) break;
    int best = -1;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (const auto& [v, nb] : neighbourhood) {
      if (nb.size() - 1 < best_size) {
        best_size = nb.size() - 1;
        best = v;
      }
    }
    std::vector<const Factor*> group;
    std::vector<Factor> rest;
    for (const Factor& f : live) {
      if (std::find(f.vars.begin(), f.vars.end(), best) != f.vars.end()) group.push_back(&f);
    }
    std::vector<int> keep;
    for (int v : neighbourhood[best]) {
      if (v != best) keep.push_back(v);
    }
    Factor merged = contract(group, keep, d, val);
    for (Factor& f : live) {
      if (std::find(f.vars.begin(), f.vars.end(), best) == f.vars.end()) rest.push_back(std::move(f));
    }
    rest.push_back(std::move(merged));
    live = std::move(rest);
  }
  std::vector<const Factor*> all;
  std::set<int> present;
  for (const Factor& f : live) {
    all.push_back(&f);
    present.insert(f.vars.begin(), f.vars.end());
  }
  if (all.empty()) {
    Factor one;
    one.data = {Rational(1)};
    return one;
  }
  return contract(all, std::vector<int>(present.begin(), present.end()), d, val);
}

void check_same_signature(const Model& a, const Model& b) {
  if (!same_generators(a.signature(), b.signature()))
    throw std::invalid_argument("models are over different signatures");
}

std::size_t tensor_order(const Generator& g) { return static_cast<std::size_t>(g.outputs + g.inputs); }

}  // namespace

std::size_t DenseTensor::rows() const { return checked_pow(static_cast<std::size_t>(dim), static_cast<std::size_t>(outputs)); }
std::size_t DenseTensor::cols() const { return checked_pow(static_cast<std::size_t>(dim), static_cast<std::size_t>(inputs)); }

Matrix<Rational> DenseTensor::matrix() const {
  Matrix<Rational> m(rows(), std::vector<Rational>(cols()));
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) m[r][c] = at(r, c);
  return m;
}

Model::Model(SignaturePtr sig, int dim, std::map<std::string, std::vector<Rational>> tensors, std::string name)
    : sig_(std::move(sig)), dim_(dim), name_(std::move(name)) {
  if (dim_ < 1) throw std::invalid_argument("model dimension must be at least 1");
  for (const auto& [gname, data] : tensors) {
    if (!sig_->find(gname)) throw std::invalid_argument("model tensor for unknown generator '" + gname + "'");
  }
  for (const Generator& g : sig_->generators()) {
    auto it = tensors.find(g.name);
    if (it == tensors.end()) throw std::invalid_argument("model is missing a tensor for '" + g.name + "'");
    const std::size_t expected = checked_pow(static_cast<std::size_t>(dim_), tensor_order(g));
    if (it->second.size() != expected)
      throw std::invalid_argument("tensor for '" + g.name + "' has " + std::to_string(it->second.size()) +
                                  " entries, expected " + std::to_string(expected));
    tensors_.push_back(std::move(it->second));
  }
}

Model Model::restrict_to(SignaturePtr sub) const {
  std::map<std::string, std::vector<Rational>> ts;
  for (const Generator& g : sub->generators()) {
    const auto i = sig_->find(g.name);
    if (!i || !(sig_->at(*i) == g)) throw std::invalid_argument("restriction: generator '" + g.name + "' not present");
    ts[g.name] = tensors_[*i];
  }
  return Model(std::move(sub), dim_, std::move(ts), name_);
}

DenseTensor realize(const Diagram& dg, const Model& model) {
  if (!same_generators(dg.signature(), model.signature()))
    throw std::invalid_argument("realize: diagram and model use different signatures");
  const int d = model.dim();
  DenseTensor out{d, dg.outputs(), dg.inputs(), {}};
  std::vector<int> legs;
  const Factor f = contract_diagram(dg, model, legs);
  Rational scale(1);
  for (int i = 0; i < dg.loops(); ++i) scale *= d;

  const std::size_t n = checked_pow(static_cast<std::size_t>(d), legs.size());
  out.data.assign(n, Rational(0));
  std::vector<int> digits(legs.size());
  std::vector<int> val(static_cast<std::size_t>(std::max(dg.num_sources(), 1)), -1);
  for (std::size_t flat = 0; flat < n; ++flat) {
    decode(flat, d, digits);
    bool consistent = true;
    for (std::size_t i = 0; i < legs.size(); ++i) {
      int& slot = val[static_cast<std::size_t>(legs[i])];
      if (slot >= 0 && slot != digits[i]) {
        consistent = false;
        break;
      }
      slot = digits[i];
    }
    if (consistent) {
      std::size_t idx = 0;
      for (int v : f.vars) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(val[static_cast<std::size_t>(v)]);
      out.data[flat] = f.data[idx] * scale;
    }
    for (int v : legs) val[static_cast<std::size_t>(v)] = -1;
  }
  return out;
}

DenseTensor realize(const LinCombo& f, const Model& model, const std::vector<Rational>& params) {
  DenseTensor out{model.dim(), f.outputs(), f.inputs(), {}};
  out.data.assign(out.rows() * out.cols(), Rational(0));
  for (const auto& [key, term] : f.terms()) {
    if (term.coeff.num_vars() > params.size())
      throw std::invalid_argument("realize: coefficient " + term.coeff.to_string() + " needs a parameter assignment");
    const Rational c = term.coeff.evaluate(params);
    if (is_zero(c)) continue;
    const DenseTensor t = realize(term.diagram, model);
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += c * t.data[i];
  }
  return out;
}

Rational evaluate_closed(const Diagram& closed, const Model& model) {
  if (!closed.is_closed()) throw std::invalid_argument("evaluate_closed: diagram is open");
  Rational value(1);
  for (const Diagram& comp : connected_components(closed)) {
    value *= realize(comp, model).data[0];
    if (is_zero(value)) break;
  }
  return value;
}

std::size_t realized_rank(const std::vector<Diagram>& diagrams, const Model& model) {
  Matrix<Rational> rows;
  for (const Diagram& d : diagrams) rows.push_back(realize(d, model).data);
  return rank(rows);
}

// ---------------------------------------------------------- constructors

Model sep_algebra_model(int n) {
  if (n < 1) throw std::invalid_argument("sep_algebra_model needs n >= 1");
  const auto un = static_cast<std::size_t>(n);
  std::vector<Rational> m(un * un * un, Rational(0));
  std::vector<Rational> u(un, Rational(1));
  std::vector<Rational> c(un * un, Rational(0));
  for (std::size_t i = 0; i < un; ++i) {
    m[(i * un + i) * un + i] = 1;
    c[i * un + i] = 1;
  }
  return Model(partition_signature(), n, {{"m", m}, {"u", u}, {"c", c}}, "sep_algebra(" + std::to_string(n) + ")");
}

Model orth_model(int n) {
  if (n < 1) throw std::invalid_argument("orth_model needs n >= 1");
  const auto un = static_cast<std::size_t>(n);
  std::vector<Rational> form(un * un, Rational(0));
  for (std::size_t i = 0; i < un; ++i) form[i * un + i] = 1;
  return Model(brauer_signature(), n, {{"c", form}, {"d", form}}, "orth(" + std::to_string(n) + ")");
}

Model symp_model(int dim) {
  if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("symp_model needs a positive even dimension, got " + std::to_string(dim));
  const auto ud = static_cast<std::size_t>(dim);
  const std::size_t n = ud / 2;
  std::vector<Rational> form(ud * ud, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    form[i * ud + (i + n)] = 1;
    form[(i + n) * ud + i] = -1;
  }
  return Model(brauer_signature(), dim, {{"c", form}, {"d", form}}, "symp(" + std::to_string(dim) + ")");
}

Model frobenius_model(const std::vector<Rational>& unit, const std::vector<std::vector<std::vector<Rational>>>& mult,
                      const std::vector<Rational>& counit, std::string name) {
  const std::size_t n = unit.size();
  if (n == 0 || counit.size() != n || mult.size() != n) throw std::invalid_argument("frobenius_model: inconsistent sizes");
  std::vector<Rational> m(n * n * n, Rational(0));
  Matrix<Rational> gram(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (mult[i].size() != n) throw std::invalid_argument("frobenius_model: inconsistent sizes");
    for (std::size_t j = 0; j < n; ++j) {
      if (mult[i][j].size() != n) throw std::invalid_argument("frobenius_model: inconsistent sizes");
      for (std::size_t k = 0; k < n; ++k) {
        m[(k * n + i) * n + j] = mult[i][j][k];
        gram[i][j] += mult[i][j][k] * counit[k];
      }
    }
  }
  Matrix<Rational> inv;
  try {
    inv = inverse(gram);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("frobenius_model: counit pairing is degenerate");
  }
  std::vector<Rational> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i * n + j] = inv[i][j];
  return Model(frobenius_signature(), static_cast<int>(n), {{"m", m}, {"u", unit}, {"eps", counit}, {"c", c}},
               std::move(name));
}

Model endo_model(const Matrix<Rational>& t) {
  const std::size_t n = t.size();
  std::vector<Rational> data;
  for (const auto& row : t) {
    if (row.size() != n) throw std::invalid_argument("endo_model: matrix is not square");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Model(endo_signature(), static_cast<int>(n), {{"T", data}}, "endo");
}

Model group_algebra_model(int q, int r, const std::vector<int>& a, bool binary_only) {
  if (q != 2 && q != 3 && q != 5 && q != 7) throw std::invalid_argument("group_algebra_model needs a prime q <= 7");
  if (r < 1 || static_cast<int>(a.size()) != r) throw std::invalid_argument("group_algebra_model needs r >= 1 and r multiplicities");
  std::vector<long> moduli;
  long size = 1;
  long qr = 1;
  for (int i = 1; i <= r; ++i) {
    long qi = 1;
    for (int k = 0; k < i; ++k) qi *= q;
    qr = qi;
    if (a[static_cast<std::size_t>(i - 1)] < 0) throw std::invalid_argument("negative multiplicity");
    for (int c = 0; c < a[static_cast<std::size_t>(i - 1)]; ++c) {
      moduli.push_back(qi);
      size *= qi;
      if (size > 4096) throw std::invalid_argument("group_algebra_model: |M| exceeds 4096");
    }
  }
  const auto n = static_cast<std::size_t>(size);
  // Element <-> mixed-radix index with the first component least significant.
  auto split = [&](long idx) {
    std::vector<long> comp(moduli.size());
    for (std::size_t c = 0; c < moduli.size(); ++c) {
      comp[c] = idx % moduli[c];
      idx /= moduli[c];
    }
    return comp;
  };
  auto join = [&](const std::vector<long>& comp) {
    long idx = 0;
    for (std::size_t c = moduli.size(); c-- > 0;) idx = idx * moduli[c] + comp[c];
    return idx;
  };
  auto add = [&](long x, long y) {
    auto cx = split(x);
    auto cy = split(y);
    for (std::size_t c = 0; c < moduli.size(); ++c) cx[c] = (cx[c] + cy[c]) % moduli[c];
    return join(cx);
  };
  auto scale = [&](long s, long x) {
    auto cx = split(x);
    for (std::size_t c = 0; c < moduli.size(); ++c) cx[c] = ((s % moduli[c]) * cx[c]) % moduli[c];
    return join(cx);
  };

  auto sig = group_algebra_signature(q, r, binary_only);
  std::map<std::string, std::vector<Rational>> ts;
  std::vector<Rational> m(n * n * n, Rational(0));
  std::vector<Rational> delta(n * n * n, Rational(0));
  std::vector<Rational> u(n, Rational(0));
  std::vector<Rational> eps(n, Rational(1));
  std::vector<Rational> s(n * n, Rational(0));
  u[0] = 1;
  for (long x = 0; x < size; ++x) {
    const auto ux = static_cast<std::size_t>(x);
    delta[(ux * n + ux) * n + ux] = 1;
    s[static_cast<std::size_t>(scale(qr - 1, x)) * n + ux] = 1;
    for (long y = 0; y < size; ++y) m[(static_cast<std::size_t>(add(x, y)) * n + ux) * n + static_cast<std::size_t>(y)] = 1;
  }
  ts["m"] = std::move(m);
  ts["Delta"] = std::move(delta);
  ts["u"] = std::move(u);
  ts["eps"] = std::move(eps);
  ts["S"] = std::move(s);
  for (const Generator& g : sig->generators()) {
    if (g.name.size() != static_cast<std::size_t>(r) + 1 || g.name[0] != 'T') continue;
    long x = 0;
    long place = 1;
    for (int i = 0; i < r; ++i) {
      x += (g.name[static_cast<std::size_t>(i) + 1] - '0') * place;
      place *= q;
    }
    std::vector<Rational> t(n * n, Rational(0));
    for (long y = 0; y < size; ++y) t[static_cast<std::size_t>(scale(x, y)) * n + static_cast<std::size_t>(y)] = 1;
    ts[g.name] = std::move(t);
  }
  std::string name = "group_algebra(q=" + std::to_string(q) + ",r=" + std::to_string(r) + ",a=";
  for (std::size_t i = 0; i < a.size(); ++i) name += (i ? "," : "") + std::to_string(a[i]);
  return Model(sig, static_cast<int>(size), std::move(ts), name + ")");
}

SignaturePtr wreath_bar_signature(const SignaturePtr& base_sig) {
  std::vector<Generator> gens = base_sig->generators();
  for (Generator g : {Generator{"P", 1, 1}, Generator{"u", 1, 0}, Generator{"eps", 0, 1}, Generator{"m", 1, 2},
                      Generator{"c", 2, 0}}) {
    if (base_sig->find(g.name))
      throw std::invalid_argument("wreath construction: base signature already uses the name '" + g.name + "'");
    gens.push_back(g);
  }
  return make_signature(std::move(gens), {"t"});
}

namespace {

Model wreath_bar_impl(const SignaturePtr& base_sig, const Model* base) {
  const int bd = base ? base->dim() : 0;
  const int d = bd + 1;
  const auto ud = static_cast<std::size_t>(d);
  std::map<std::string, std::vector<Rational>> ts;
  for (std::size_t g = 0; g < base_sig->size(); ++g) {
    const Generator& gen = base_sig->at(g);
    const std::size_t order = tensor_order(gen);
    std::vector<Rational> t(checked_pow(ud, order), Rational(0));
    if (base) {
      const auto& src = base->tensor(g);
      std::vector<int> digits(order);
      for (std::size_t flat = 0; flat < src.size(); ++flat) {
        if (is_zero(src[flat])) continue;
        decode(flat, bd, digits);
        for (int& x : digits) ++x;
        t[encode(digits, d)] = src[flat];
      }
    }
    ts[gen.name] = std::move(t);
  }
  std::vector<Rational> p(ud * ud, Rational(0));
  std::vector<Rational> u(ud, Rational(0));
  std::vector<Rational> eps(ud, Rational(0));
  std::vector<Rational> m(ud * ud * ud, Rational(0));
  std::vector<Rational> c(ud * ud, Rational(0));
  p[0] = 1;
  u[0] = 1;
  eps[0] = 1;
  c[0] = 1;
  for (std::size_t x = 0; x < ud; ++x) m[(x * ud + 0) * ud + x] = 1;  // m(a, b) = P(a) b
  ts["P"] = std::move(p);
  ts["u"] = std::move(u);
  ts["eps"] = std::move(eps);
  ts["m"] = std::move(m);
  ts["c"] = std::move(c);
  return Model(wreath_bar_signature(base_sig), d, std::move(ts),
               base ? "wreath_bar(" + base->name() + ")" : std::string("wreath_bar(0)"));
}

}  // namespace

Model wreath_bar_model(const Model& base) { return wreath_bar_impl(base.signature_ptr(), &base); }

Model wreath_bar_over_zero(const SignaturePtr& base_sig) { return wreath_bar_impl(base_sig, nullptr); }

Model direct_sum(const Model& a, const Model& b) {
  check_same_signature(a, b);
  const int d = a.dim() + b.dim();
  std::map<std::string, std::vector<Rational>> ts;
  for (std::size_t g = 0; g < a.signature().size(); ++g) {
    const Generator& gen = a.signature().at(g);
    const std::size_t order = tensor_order(gen);
    std::vector<Rational> t(checked_pow(static_cast<std::size_t>(d), order), Rational(0));
    std::vector<int> digits(order);
    for (int part = 0; part < 2; ++part) {
      const Model& src = part == 0 ? a : b;
      const int offset = part == 0 ? 0 : a.dim();
      const auto& data = src.tensor(g);
      for (std::size_t flat = 0; flat < data.size(); ++flat) {
        if (is_zero(data[flat])) continue;
        decode(flat, src.dim(), digits);
        for (int& x : digits) x += offset;
        t[encode(digits, d)] = data[flat];
      }
    }
    ts[gen.name] = std::move(t);
  }
  return Model(a.signature_ptr(), d, std::move(ts), a.name() + " + " + b.name());
}

Model tensor_product(const Model& a, const Model& b) {
  check_same_signature(a, b);
  const int d = a.dim() * b.dim();
  std::map<std::string, std::vector<Rational>> ts;
  for (std::size_t g = 0; g < a.signature().size(); ++g) {
    const Generator& gen = a.signature().at(g);
    const std::size_t order = tensor_order(gen);
    std::vector<Rational> t(checked_pow(static_cast<std::size_t>(d), order), Rational(0));
    std::vector<int> da(order);
    std::vector<int> db(order);
    std::vector<int> dc(order);
    const auto& ta = a.tensor(g);
    const auto& tb = b.tensor(g);
    for (std::size_t fa = 0; fa < ta.size(); ++fa) {
      if (is_zero(ta[fa])) continue;
      decode(fa, a.dim(), da);
      for (std::size_t fb = 0; fb < tb.size(); ++fb) {
        if (is_zero(tb[fb])) continue;
        decode(fb, b.dim(), db);
        for (std::size_t k = 0; k < order; ++k) dc[k] = da[k] * b.dim() + db[k];
        t[encode(dc, d)] = ta[fa] * tb[fb];
      }
    }
    ts[gen.name] = std::move(t);
  }
  return Model(a.signature_ptr(), d, std::move(ts), a.name() + " * " + b.name());
}

}  // namespace icat
