#include "icat/lincombo.hpp"

#include <stdexcept>

namespace icat {

LinCombo::LinCombo(SignaturePtr sig, int outputs, int inputs)
    : sig_(std::move(sig)), outputs_(outputs), inputs_(inputs) {}

LinCombo::LinCombo(const Diagram& d) : LinCombo(d.signature_ptr(), d.outputs(), d.inputs()) { add(d, Poly(1)); }

void LinCombo::add(const Diagram& d, const Poly& coeff) {
  if (d.outputs() != outputs_ || d.inputs() != inputs_)
    throw std::invalid_argument("linear combination mixes arities");
  if (coeff.is_zero()) return;
  CanonicalForm cf = canonicalize(d);
  auto it = terms_.find(cf.key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(cf.key), Term{std::move(cf.diagram), coeff});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff.is_zero()) terms_.erase(it);
}

LinCombo& LinCombo::operator+=(const LinCombo& other) {
  if (other.outputs_ != outputs_ || other.inputs_ != inputs_)
    throw std::invalid_argument("linear combination mixes arities");
  for (const auto& [key, term] : other.terms_) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, term);
      continue;
    }
    it->second.coeff += term.coeff;
    if (it->second.coeff.is_zero()) terms_.erase(it);
  }
  return *this;
}

LinCombo& LinCombo::operator*=(const Poly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, term] : terms_) term.coeff *= scalar;
  return *this;
}

bool operator==(const LinCombo& a, const LinCombo& b) {
  if (a.outputs_ != b.outputs_ || a.inputs_ != b.inputs_ || a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.coeff != ib->second.coeff) return false;
  }
  return true;
}

LinCombo compose(const LinCombo& g, const LinCombo& f) {
  if (g.inputs() != f.outputs()) throw std::invalid_argument("compose: arity mismatch in linear combinations");
  LinCombo out(f.signature_ptr(), g.outputs(), f.inputs());
  for (const auto& [kg, tg] : g.terms())
    for (const auto& [kf, tf] : f.terms()) out.add(compose(tg.diagram, tf.diagram), tg.coeff * tf.coeff);
  return out;
}

LinCombo tensor(const LinCombo& f, const LinCombo& g) {
  LinCombo out(f.signature_ptr(), f.outputs() + g.outputs(), f.inputs() + g.inputs());
  for (const auto& [kf, tf] : f.terms())
    for (const auto& [kg, tg] : g.terms()) out.add(tensor(tf.diagram, tg.diagram), tf.coeff * tg.coeff);
  return out;
}

LinCombo trace_close(const LinCombo& f) {
  LinCombo out(f.signature_ptr(), 0, 0);
  for (const auto& [k, t] : f.terms()) out.add(trace_close(t.diagram), t.coeff);
  return out;
}

LinCombo power(const LinCombo& f, int n) {
  if (f.outputs() != f.inputs()) throw std::invalid_argument("power: linear combination is not square");
  LinCombo result(Diagram::identity(f.signature_ptr(), f.outputs()));
  for (int k = 0; k < n; ++k) result = compose(f, result);
  return result;
}

}  // namespace icat
