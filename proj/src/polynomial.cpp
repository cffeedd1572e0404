#include "icat/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace icat {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(Rational constant) {
  if (!icat::is_zero(constant)) coeffs_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int degree, Rational coeff) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
  c.back() = std::move(coeff);
  return UPoly(std::move(c));
}

UPoly UPoly::linear_factor(const Rational& root) { return UPoly({-root, Rational(1)}); }

void UPoly::trim() {
  while (!coeffs_.empty() && icat::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  r *= Rational(1) / leading();
  return r;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1;
  for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  std::vector<Integer> ints;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  std::vector<Rational> out;
  for (auto& v : ints) out.emplace_back(v / content);
  return UPoly(std::move(out));
}

UPoly UPoly::truncated(int n) const {
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + std::min<std::ptrdiff_t>(std::max(n, 0),
                                                                     static_cast<std::ptrdiff_t>(coeffs_.size())));
  return UPoly(std::move(c));
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (icat::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& scalar) {
  if (icat::is_zero(scalar)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::string UPoly::to_string(const std::string& var) const {
  return Poly::from_univariate(*this).to_string({var});
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  const Rational lead_inv = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * lead_inv;
    quot[static_cast<std::size_t>(k - db)] = c;
    if (icat::is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.primitive();
  }
  return x.monic();
}

bool is_squarefree(const UPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational denom = xs[i] - xs[i - level];
      if (icat::is_zero(denom)) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / denom;
      if (i == level) break;
    }
  }
  UPoly result;
  for (std::size_t k = n; k-- > 0;) {
    result *= UPoly::linear_factor(xs[k]);
    result += UPoly(dd[k]);
  }
  return result;
}

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p, long max_height) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> roots;
  UPoly work = p.primitive();
  int zero_mult = 0;
  while (!work.is_zero() && icat::is_zero(work.coeff(0))) {
    work = exact_div(work, UPoly::monomial(1));
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
  if (work.degree() <= 0) return roots;
  const Integer lead = abs(work.leading().get_num());
  const Integer constant = abs(work.coeff(0).get_num());
  for (long den = 1; den <= max_height; ++den) {
    if (lead % den != 0) continue;
    for (long num = 1; num <= max_height; ++num) {
      if (constant % num != 0) continue;
      Integer g;
      mpz_gcd_ui(g.get_mpz_t(), Integer(num).get_mpz_t(), static_cast<unsigned long>(den));
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        const Rational cand(Integer(sign * num), Integer(den));
        int mult = 0;
        while (work.degree() > 0 && icat::is_zero(work(cand))) {
          work = exact_div(work, UPoly::linear_factor(cand));
          ++mult;
        }
        if (mult > 0) roots.emplace_back(cand, mult);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

// ----------------------------------------------------------------- Poly

Poly::Poly(Rational constant) {
  if (!icat::is_zero(constant)) terms_.emplace(Monomial{}, std::move(constant));
}

Poly Poly::variable(std::size_t index) {
  Monomial m(index + 1, 0);
  m.back() = 1;
  Poly p;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Poly Poly::from_univariate(const UPoly& p, std::size_t var) {
  Poly out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (icat::is_zero(p.coeff(k))) continue;
    Monomial m;
    if (k > 0) {
      m.assign(var + 1, 0);
      m.back() = static_cast<unsigned>(k);
    }
    out.terms_.emplace(std::move(m), p.coeff(k));
  }
  return out;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial '" + to_string() + "' is not a constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::size_t Poly::num_vars() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.size());
  return n;
}

int Poly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (unsigned e : m) s += static_cast<int>(e);
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_term(Monomial m, const Rational& c) {
  if (icat::is_zero(c)) return;
  while (!m.empty() && m.back() == 0) m.pop_back();
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (icat::is_zero(it->second)) terms_.erase(it);
  }
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() < num_vars()) throw std::invalid_argument("evaluate: missing variable values");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (unsigned e = 0; e < m[i]; ++e) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

Poly Poly::substitute(const std::vector<std::optional<Rational>>& values) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest = m;
    for (std::size_t i = 0; i < m.size() && i < values.size(); ++i) {
      if (!values[i]) continue;
      for (unsigned e = 0; e < m[i]; ++e) coeff *= *values[i];
      rest[i] = 0;
    }
    out.add_term(std::move(rest), coeff);
  }
  return out;
}

UPoly Poly::to_univariate() const {
  if (num_vars() > 1) throw std::logic_error("polynomial '" + to_string() + "' is not univariate");
  std::vector<Rational> c;
  for (const auto& [m, v] : terms_) {
    const std::size_t k = m.empty() ? 0 : m[0];
    if (c.size() <= k) c.resize(k + 1, Rational(0));
    c[k] = v;
  }
  return UPoly(std::move(c));
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Poly::Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var_name = [&](std::size_t i) { return i < names.size() ? names[i] : "x" + std::to_string(i); };
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      os << icat::to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << icat::to_string(mag) << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace icat
