#include "icat/character.hpp"

#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "icat/diagram_io.hpp"
#include "icat/enumerate.hpp"

namespace icat {

int wires_degree_bound(const Diagram& connected) { return connected.num_wires(); }

// ------------------------------------------------------------------ Character

struct Character::Memo {
  std::mutex mu;
  std::unordered_map<std::string, Poly> table;
};

Character::Character(SignaturePtr sig, std::vector<std::string> params, Rule rule, DegreeBound bound,
                     std::string provenance)
    : sig_(std::move(sig)),
      params_(std::move(params)),
      rule_(std::move(rule)),
      bound_(std::move(bound)),
      provenance_(std::move(provenance)),
      memo_(std::make_shared<Memo>()) {
  if (!sig_) throw std::invalid_argument("Character: null signature");
  if (!rule_) throw std::invalid_argument("Character: missing rule");
  if (!bound_) bound_ = wires_degree_bound;
}

Poly Character::connected_value(const Diagram& connected) const {
  if (!same_generators(connected.signature(), *sig_))
    throw std::invalid_argument("character: diagram signature does not match");
  const std::string key = closed_diagram_key(connected);
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->table.find(key);
    if (it != memo_->table.end()) return it->second;
  }
  Poly value = rule_(connected);
  std::lock_guard<std::mutex> lock(memo_->mu);
  // A concurrent writer computed the same deterministic value; keep the first.
  return memo_->table.emplace(key, std::move(value)).first->second;
}

Poly Character::evaluate(const Diagram& closed) const {
  if (!closed.is_closed()) throw std::invalid_argument("character: diagram is open");
  Poly value(1);
  for (const Diagram& comp : connected_components(closed)) {
    value *= connected_value(comp);
    if (value.is_zero()) break;
  }
  return value;
}

Rational Character::evaluate_at(const Diagram& closed, const std::vector<Rational>& point) const {
  if (point.size() < params_.size()) throw std::invalid_argument("character: missing parameter values");
  if (!closed.is_closed()) throw std::invalid_argument("character: diagram is open");
  Rational value(1);
  for (const Diagram& comp : connected_components(closed)) {
    value *= connected_value(comp).evaluate(point);
    if (is_zero(value)) break;
  }
  return value;
}

Character Character::specialize(const std::vector<Rational>& point) const {
  if (point.size() < params_.size()) throw std::invalid_argument("specialize: missing parameter values");
  Character self = *this;
  std::string prov = provenance_ + " at (";
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (i) prov += ", ";
    prov += params_[i] + "=" + to_string(point[i]);
  }
  prov += ")";
  return Character(
      sig_, {}, [self, point](const Diagram& d) { return Poly(self.connected_value(d).evaluate(point)); },
      [](const Diagram&) { return 0; }, prov);
}

std::size_t Character::memo_size() const {
  std::lock_guard<std::mutex> lock(memo_->mu);
  return memo_->table.size();
}

// -------------------------------------------------------------- AlphaSequence

AlphaSequence AlphaSequence::from_list(std::vector<Rational> values) {
  AlphaSequence a;
  a.values_ = std::make_shared<std::vector<Rational>>(std::move(values));
  return a;
}

AlphaSequence AlphaSequence::from_rational(const UPoly& p, const UPoly& q) {
  if (is_zero(q.coeff(0))) throw std::invalid_argument("AlphaSequence: denominator vanishes at 0");
  AlphaSequence a;
  a.values_ = std::make_shared<std::vector<Rational>>();
  a.p_ = p;
  a.q_ = q;
  a.rational_ = true;
  return a;
}

Rational AlphaSequence::at(int genus) const {
  if (genus < 0) throw std::out_of_range("AlphaSequence: negative genus");
  const auto g = static_cast<std::size_t>(genus);
  if (!rational_) {
    if (g >= values_->size())
      throw std::out_of_range("AlphaSequence: genus " + std::to_string(genus) + " beyond the given list");
    return (*values_)[g];
  }
  // a_n = (p_n - sum_{k>=1} q_k a_{n-k}) / q_0, extended on demand.
  while (values_->size() <= g) {
    const int n = static_cast<int>(values_->size());
    Rational v = p_.coeff(n);
    for (int k = 1; k <= std::min(n, q_.degree()); ++k) v -= q_.coeff(k) * (*values_)[static_cast<std::size_t>(n - k)];
    values_->push_back(v / q_.coeff(0));
  }
  return (*values_)[g];
}

std::vector<Rational> AlphaSequence::prefix(int n) const {
  std::vector<Rational> out;
  for (int g = 0; g < n; ++g) out.push_back(at(g));
  return out;
}

// ------------------------------------------------------------- constructions

Character char_from_model(const Model& model) {
  return Character(
      model.signature_ptr(), {}, [model](const Diagram& d) { return Poly(evaluate_closed(d, model)); },
      [](const Diagram&) { return 0; }, "model:" + model.name());
}

namespace {

int one(const Diagram&) { return 1; }
int zero(const Diagram&) { return 0; }

}  // namespace

Character gl_character() {
  return Character(gl_signature(), {"t"}, [](const Diagram&) { return Poly::variable(0); }, one, "closed_form:gl");
}

Character orth_character() {
  return Character(brauer_signature(), {"t"}, [](const Diagram&) { return Poly::variable(0); }, one,
                   "closed_form:orth");
}

Character sym_character() {
  return Character(partition_signature(), {"t"}, [](const Diagram&) { return Poly::variable(0); }, one,
                   "closed_form:sym");
}

Character frobenius_character(const AlphaSequence& alpha) {
  return Character(
      frobenius_signature(), {}, [alpha](const Diagram& d) { return Poly(alpha.at(closed_genus(d))); }, zero,
      "closed_form:frobenius");
}

Character endo_character(const std::vector<std::pair<Rational, Rational>>& eigen) {
  return Character(
      endo_signature(), {},
      [eigen](const Diagram& d) {
        const int i = d.count("T");
        Rational v(0);
        for (const auto& [lambda, weight] : eigen) {
          Rational power(1);
          for (int k = 0; k < i; ++k) power *= lambda;
          v += weight * power;
        }
        return Poly(v);
      },
      zero, "closed_form:endo");
}

Character symp_character() {
  std::vector<std::pair<Rational, Model>> models;
  for (int n = 2; n <= 12; n += 2) models.emplace_back(Rational(n), symp_model(n));
  return interpolate_family(std::move(models), one);
}

std::string dvr_generator_name(int r, int i) {
  if (r < 1 || i < 1) throw std::invalid_argument("dvr_generator_name needs r >= 1 and i >= 1");
  std::string name = "T1";
  for (int k = 1; k < r; ++k) name += k == i ? '1' : '0';
  return name;
}

namespace {

const Model& dvr_probe_model(int q, int r, int j) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, Model> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({q, r, j});
  if (it == cache.end()) {
    std::vector<int> a(static_cast<std::size_t>(r), 0);
    a[static_cast<std::size_t>(j - 1)] = 1;
    it = cache.emplace(std::make_tuple(q, r, j), group_algebra_model(q, r, a, true)).first;
  }
  return it->second;
}

// Exponent e with value = q^e, or -1 when value is not such a power.
int log_exact(Rational value, int q) {
  if (value <= 0 || value.get_den() != 1) return -1;
  int e = 0;
  mpz_class n = value.get_num();
  while (n != 1) {
    if (n % q != 0) return -1;
    n /= q;
    ++e;
  }
  return e;
}

}  // namespace

std::vector<int> dvr_exponents(const Diagram& connected, int r) {
  std::vector<int> exps;
  for (int j = 1; j <= r; ++j) {
    int agreed = -1;
    for (int q : {2, 3}) {
      const Model& m = dvr_probe_model(q, r, j);
      const Rational v = realize(connected, m).data[0];
      const int e = log_exact(v, q);
      if (e < 0)
        throw CharacterError("dvr: value " + to_string(v) + " at q=" + std::to_string(q) + " is not a power of q for " +
                             format_diagram(connected));
      if (agreed >= 0 && e != agreed)
        throw CharacterError("dvr: exponents disagree between q=2 and q=3 (" + std::to_string(agreed) + " vs " +
                             std::to_string(e) + ") for " + format_diagram(connected));
      agreed = e;
    }
    exps.push_back(agreed);
  }
  return exps;
}

Character dvr_character(int r) {
  if (r < 1 || r > 3) throw std::invalid_argument("dvr_character supports 1 <= r <= 3");
  SignaturePtr sig = group_algebra_signature(2, r, true);
  return Character(
      sig, sig->params(),
      [r](const Diagram& d) {
        const std::vector<int> e = dvr_exponents(d, r);
        Poly v(1);
        for (std::size_t j = 0; j < e.size(); ++j) v *= Poly::variable(j).pow(static_cast<unsigned>(e[j]));
        return v;
      },
      [](const Diagram& d) { return 2 * d.num_wires(); }, "closed_form:dvr(r=" + std::to_string(r) + ")");
}

Character interpolate_family(std::vector<std::pair<Rational, Model>> models, DegreeBound bound) {
  if (models.empty()) throw std::invalid_argument("interpolate_family: no models");
  if (!bound) bound = wires_degree_bound;
  std::set<Rational> seen;
  for (const auto& [point, model] : models) {
    if (!seen.insert(point).second) throw std::invalid_argument("interpolate_family: repeated point " + to_string(point));
    if (!same_generators(model.signature(), models.front().second.signature()))
      throw std::invalid_argument("interpolate_family: models have different signatures");
  }
  SignaturePtr sig = models.front().second.signature_ptr();
  std::string prov = "interpolated:" + models.front().second.name() + " at {";
  for (std::size_t i = 0; i < models.size(); ++i) prov += (i ? "," : "") + to_string(models[i].first);
  prov += "}";
  auto shared = std::make_shared<const std::vector<std::pair<Rational, Model>>>(std::move(models));
  return Character(
      sig, {"t"},
      [shared, bound](const Diagram& d) {
        const auto& ms = *shared;
        const int deg = bound(d);
        const std::size_t need = static_cast<std::size_t>(deg) + 1;
        if (ms.size() < need)
          throw CharacterError("interpolate_family: degree bound " + std::to_string(deg) + " needs " +
                               std::to_string(need) + " points, have " + std::to_string(ms.size()) + " for " +
                               format_diagram(d));
        std::vector<Rational> xs;
        std::vector<Rational> ys;
        for (std::size_t i = 0; i < need; ++i) {
          xs.push_back(ms[i].first);
          ys.push_back(evaluate_closed(d, ms[i].second));
        }
        const UPoly p = interpolate(xs, ys);
        for (std::size_t i = need; i < ms.size(); ++i) {
          const Rational expect = p(ms[i].first);
          const Rational got = evaluate_closed(d, ms[i].second);
          if (expect != got)
            throw CharacterError("interpolate_family: witness t=" + to_string(ms[i].first) + " gives " +
                                 to_string(got) + " but the interpolant " + p.to_string() + " predicts " +
                                 to_string(expect) + " for " + format_diagram(d) + "; the degree bound is too small");
        }
        return Poly::from_univariate(p);
      },
      bound, prov);
}

namespace {

std::vector<std::string> merged_params(const Character& a, const Character& b) {
  if (!same_generators(a.signature(), b.signature()))
    throw std::invalid_argument("character operation: signatures differ");
  if (a.params().empty()) return b.params();
  if (b.params().empty() || a.params() == b.params()) return a.params();
  throw std::invalid_argument("character operation: parameter lists differ");
}

}  // namespace

Character char_add(const Character& a, const Character& b) {
  return Character(
      a.signature_ptr(), merged_params(a, b),
      [a, b](const Diagram& d) { return a.connected_value(d) + b.connected_value(d); },
      [a, b](const Diagram& d) { return std::max(a.degree_bound(d), b.degree_bound(d)); },
      "sum(" + a.provenance() + ", " + b.provenance() + ")");
}

Character char_mul(const Character& a, const Character& b) {
  return Character(
      a.signature_ptr(), merged_params(a, b),
      [a, b](const Diagram& d) { return a.connected_value(d) * b.connected_value(d); },
      [a, b](const Diagram& d) { return a.degree_bound(d) + b.degree_bound(d); },
      "product(" + a.provenance() + ", " + b.provenance() + ")");
}

Character char_scale(const Poly& s, const Character& chi, std::vector<std::string> params) {
  if (params.empty()) params = chi.params();
  if (!chi.params().empty() && params != chi.params())
    throw std::invalid_argument("char_scale: parameter lists differ");
  if (s.num_vars() > params.size()) throw std::invalid_argument("char_scale: scalar uses unnamed parameters");
  const int extra = s.total_degree();
  return Character(
      chi.signature_ptr(), params, [s, chi](const Diagram& d) { return s * chi.connected_value(d); },
      [chi, extra](const Diagram& d) { return chi.degree_bound(d) + std::max(extra, 0); },
      "scaled(" + s.to_string(params) + ", " + chi.provenance() + ")");
}

}  // namespace icat
