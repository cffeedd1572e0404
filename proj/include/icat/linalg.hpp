#pragma once

// Exact dense linear algebra, generic over the scalar field. A field type F
// must provide +, -, *, / and a free function is_zero(const F&).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "icat/polynomial.hpp"
#include "icat/rational.hpp"

namespace icat {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
Matrix<F> transpose(const Matrix<F>& m) {
  if (m.empty()) return {};
  Matrix<F> t(m[0].size(), std::vector<F>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

template <class F>
struct Echelon {
  Matrix<F> rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan reduction to reduced row echelon form.
template <class F>
Echelon<F> row_reduce(Matrix<F> m) {
  Echelon<F> out;
  if (m.empty()) return out;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!is_zero(m[i][c])) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const F inv = F(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!is_zero(m[r][j])) m[i][j] = m[i][j] - f * m[r][j];
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rref = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).rank();
}

/// Basis of the right kernel {x : m x = 0}, one vector per row of the result.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m, std::size_t cols) {
  Echelon<F> e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  Matrix<F> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = F(0) - e.rref[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of the left kernel {y : y^T m = 0}.
template <class F>
Matrix<F> left_nullspace(const Matrix<F>& m) {
  return nullspace(transpose(m), m.size());
}

/// Indices of a maximal linearly independent subset of the rows, in
/// increasing order (greedy from the top).
template <class F>
std::vector<std::size_t> independent_rows(const Matrix<F>& m) {
  return row_reduce(transpose(m)).pivot_cols;
}

/// Solves a x = b; nullopt when inconsistent. Free variables are set to zero.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  Matrix<F> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b.at(i));
  Echelon<F> e = row_reduce(std::move(aug));
  std::vector<F> x(cols, F(0));
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] == cols) return std::nullopt;
    x[e.pivot_cols[r]] = e.rref[r][cols];
  }
  return x;
}

template <class F>
F determinant(Matrix<F> m) {
  const std::size_t n = m.size();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i) {
      if (!is_zero(m[i][c])) {
        piv = i;
        break;
      }
    }
    if (piv == n) return F(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = F(0) - det;
    }
    det = det * m[c][c];
    const F inv = F(1) / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      const F f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return det;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  const std::size_t n = m.size();
  Matrix<F> aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, F(0));
    aug[i][n + i] = F(1);
  }
  Echelon<F> e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivot_cols[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  Matrix<F> inv(n, std::vector<F>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rref[i][n + j];
  return inv;
}

template <class F, class G>
Matrix<F> map_matrix(const Matrix<G>& m, auto&& fn) {
  Matrix<F> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const auto& x : m[i]) out[i].push_back(fn(x));
  }
  return out;
}

/// Element of Q(t): numerator over monic denominator, in lowest terms.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(int c) : num_(Rational(c)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num) : num_(std::move(num)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num, UPoly den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool is_zero(const RatFunc& x) { return x.num_.is_zero(); }

 private:
  UPoly num_;
  UPoly den_{Rational(1)};
};

/// Fraction-free (Bareiss) elimination over Q[t] with row and column
/// pivoting. Returns the rank and the last nonzero leading pivot, which is an
/// r x r minor of the input.
struct BareissResult {
  std::size_t rank = 0;
  UPoly last_pivot;
};
BareissResult bareiss(Matrix<UPoly> m);

}  // namespace icat
