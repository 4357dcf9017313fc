#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "triad/rational.hpp"

namespace triad {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

namespace detail {

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
inline void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace detail

/// Row-style Hermite normal form of the Z-span of `generators` (each of length
/// ncols). The result is a basis of the span: echelon rows, positive pivots,
/// entries above each pivot reduced into [0, pivot). Equal spans give equal output.
inline IntMatrix hermite_basis(IntMatrix a, std::size_t ncols) {
  std::size_t row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    // Combine all rows below into a single gcd row at position `row`.
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    for (std::size_t i = row + 1; i < a.size(); ++i) {
      if (a[i][col] == 0) continue;
      Integer g, s, t;
      detail::extended_gcd(a[row][col], a[i][col], g, s, t);
      const Integer u = a[row][col] / g, v = a[i][col] / g;
      for (std::size_t j = col; j < ncols; ++j) {
        const Integer x = a[row][j], y = a[i][j];
        a[row][j] = s * x + t * y;
        a[i][j] = u * y - v * x;
      }
    }
    if (a[row][col] < 0)
      for (std::size_t j = col; j < ncols; ++j) a[row][j] = -a[row][j];
    pivot_cols.push_back(col);
    ++row;
  }
  a.resize(row);
  for (std::size_t r = 0; r < a.size(); ++r) {
    const std::size_t col = pivot_cols[r];
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = col; j < ncols; ++j) a[i][j] -= q * a[r][j];
    }
  }
  return a;
}

/// U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ..., di >= 0.
struct SmithForm {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
};

inline IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, IntVector(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

namespace detail {

inline void make_diagonal_nonnegative(SmithForm& f) {
  for (std::size_t i = 0; i < std::min(f.s.size(), f.v.size()); ++i)
    if (f.s[i][i] < 0) {
      for (auto& x : f.s[i]) x = -x;
      for (auto& x : f.u[i]) x = -x;
    }
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& a, std::size_t ncols) {
  const std::size_t m = a.size(), n = ncols;
  SmithForm f{int_identity(m), a, int_identity(n)};
  auto& s = f.s;

  auto row_combine = [&](std::size_t i, std::size_t k, const Integer& c) {  // row k -= c * row i
    for (std::size_t j = 0; j < n; ++j) s[k][j] -= c * s[i][j];
    for (std::size_t j = 0; j < m; ++j) f.u[k][j] -= c * f.u[i][j];
  };
  auto col_combine = [&](std::size_t i, std::size_t k, const Integer& c) {  // col k -= c * col i
    for (std::size_t j = 0; j < m; ++j) s[j][k] -= c * s[j][i];
    for (std::size_t j = 0; j < n; ++j) f.v[j][k] -= c * f.v[j][i];
  };
  auto swap_rows = [&](std::size_t i, std::size_t k) {
    std::swap(s[i], s[k]);
    std::swap(f.u[i], f.u[k]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t k) {
    for (auto& r : s) std::swap(r[i], r[k]);
    for (auto& r : f.v) std::swap(r[i], r[k]);
  };

  const std::size_t diag = std::min(m, n);
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (s[i][j] != 0 && (pr == m || abs(s[i][j]) < abs(s[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == m) {
        detail::make_diagonal_nonnegative(f);
        return f;
      }
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s[i][t].get_mpz_t(), s[t][t].get_mpz_t());
        row_combine(t, i, q);
        if (s[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s[t][j].get_mpz_t(), s[t][t].get_mpz_t());
        col_combine(t, j, q);
        if (s[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any offending row into row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s[i][j] % s[t][t] != 0) {
            row_combine(i, t, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  detail::make_diagonal_nonnegative(f);
  return f;
}

}  // namespace triad
