#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "triad/rational.hpp"

// Dense exact linear algebra over Q. Matrices are row-major vectors of rows.

namespace triad {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

inline std::size_t rows(const Matrix& a) { return a.size(); }
inline std::size_t cols(const Matrix& a, std::size_t fallback = 0) { return a.empty() ? fallback : a.front().size(); }

inline Matrix zero_matrix(std::size_t r, std::size_t c) { return Matrix(r, Vector(c, Rational(0))); }

inline Matrix identity_matrix(std::size_t n) {
  Matrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Matrix transpose(const Matrix& a, std::size_t ncols = 0) {
  const std::size_t r = a.size(), c = cols(a, ncols);
  Matrix t = zero_matrix(c, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) t[j][i] = a[i][j];
  return t;
}

/// a (r x k) times b (k x c); `inner` disambiguates the shape when a has no rows.
inline Matrix multiply(const Matrix& a, const Matrix& b, std::size_t out_cols = 0) {
  const std::size_t r = a.size();
  const std::size_t k = b.size();
  const std::size_t c = cols(b, out_cols);
  Matrix out = zero_matrix(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

inline Vector multiply(const Vector& v, const Matrix& b, std::size_t out_cols = 0) {
  Vector out(cols(b, out_cols), Rational(0));
  for (std::size_t l = 0; l < b.size(); ++l) {
    if (v[l] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[l] * b[l][j];
  }
  return out;
}

/// x^T F y for a square form F.
inline Rational bilinear(const Vector& x, const Matrix& form, const Vector& y) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) row += form[i][j] * y[j];
    acc += x[i] * row;
  }
  return acc;
}

inline bool is_symmetric(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) return false;
  }
  return true;
}

namespace detail {

/// In-place row reduction to reduced row-echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < a[i].size(); ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank(Matrix a, std::size_t ncols = 0) { return detail::rref(a, cols(a, ncols)).size(); }

inline Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const Rational inv = 1 / a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      const Rational f = a[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

inline std::optional<Matrix> inverse(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix aug = zero_matrix(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  if (detail::rref(aug, n).size() != n) return std::nullopt;
  Matrix inv = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

/// Solves X * basis = target for X, where basis has linearly independent rows.
/// Returns nullopt when some target row is outside the row space of basis.
inline std::optional<Matrix> solve_left(const Matrix& target, const Matrix& basis, std::size_t ncols) {
  const std::size_t k = basis.size();
  // Augment basis^T | target^T and reduce: columns of basis^T are basis rows.
  Matrix aug = zero_matrix(ncols, k + target.size());
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug[j][i] = basis[i][j];
    for (std::size_t t = 0; t < target.size(); ++t) aug[j][k + t] = target[t][j];
  }
  auto pivots = detail::rref(aug, k);
  if (pivots.size() != k) return std::nullopt;
  for (std::size_t j = k; j < ncols; ++j)
    for (std::size_t t = 0; t < target.size(); ++t)
      if (aug[j][k + t] != 0) return std::nullopt;
  Matrix x = zero_matrix(target.size(), k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < target.size(); ++t) x[t][i] = aug[i][k + t];
  return x;
}

/// Symmetric G = R^T diag(pivots) R with R unit upper triangular. Stops at the
/// first zero pivot, in which case `complete` is false.
struct LdlFactors {
  Matrix upper;
  Vector pivots;
  bool complete = true;
};

inline LdlFactors ldl(const Matrix& g) {
  const std::size_t n = g.size();
  LdlFactors f;
  f.upper = identity_matrix(n);
  Matrix work = g;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational d = work[i][i];
    if (d == 0) {
      f.complete = false;
      return f;
    }
    f.pivots.push_back(d);
    for (std::size_t j = i + 1; j < n; ++j) f.upper[i][j] = work[i][j] / d;
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = i + 1; l < n; ++l) work[j][l] -= f.upper[i][j] * work[i][l];
  }
  return f;
}

inline bool is_positive_definite(const Matrix& g) {
  auto f = ldl(g);
  if (!f.complete) return false;
  for (const auto& d : f.pivots)
    if (d <= 0) return false;
  return true;
}

}  // namespace triad
