#include "icat/linalg.hpp"

namespace icat {

RatFunc::RatFunc(UPoly num, UPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = UPoly();
    den_ = UPoly(Rational(1));
    return;
  }
  UPoly g = gcd(num, den);
  num = exact_div(num, g);
  den = exact_div(den, g);
  const Rational lead = den.leading();
  num_ = num * (Rational(1) / lead);
  den_ = den * (Rational(1) / lead);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw std::domain_error("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

BareissResult bareiss(Matrix<UPoly> m) {
  BareissResult out;
  const std::size_t rows = m.size();
  if (rows == 0) return out;
  const std::size_t cols = m[0].size();
  UPoly prev(Rational(1));
  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t j = k; j < cols && pr == rows; ++j) {
      for (std::size_t i = k; i < rows; ++i) {
        if (!m[i][j].is_zero()) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[k], m[pr]);
    if (pc != k) {
      for (auto& row : m) std::swap(row[k], row[pc]);
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = UPoly();
    }
    prev = m[k][k];
  }
  out.rank = k;
  out.last_pivot = prev;
  return out;
}

}  // namespace icat
