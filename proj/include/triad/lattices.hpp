#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triad/error.hpp"
#include "triad/linalg.hpp"
#include "triad/normal_form.hpp"
#include "triad/qseries.hpp"

namespace triad {

/// A free abelian group inside an ambient Q-space with a rational symmetric
/// form. Basis rows are expressed in ambient coordinates, so a lattice and its
/// dual are comparable subgroups of the same space.
class RationalLattice {
 public:
  RationalLattice() = default;

  RationalLattice(Matrix form, Matrix basis) : form_(std::move(form)), basis_(std::move(basis)) {
    const std::size_t m = form_.size();
    if (!is_symmetric(form_)) throw Error(ErrorKind::InvalidArgument, "ambient form is not square and symmetric");
    for (const auto& row : basis_)
      if (row.size() != m)
        throw Error(ErrorKind::LengthMismatch, "basis row of length " + std::to_string(row.size()) +
                                                   " in ambient dimension " + std::to_string(m));
    if (basis_.size() > m || triad::rank(basis_, m) != basis_.size())
      throw Error(ErrorKind::InvalidArgument, "basis rows are not linearly independent");
  }

  std::size_t ambient_dimension() const noexcept { return form_.size(); }
  std::size_t rank() const noexcept { return basis_.size(); }
  const Matrix& form() const noexcept { return form_; }
  const Matrix& basis() const noexcept { return basis_; }

 private:
  Matrix form_;
  Matrix basis_;
};

/// Lattice with the given Gram matrix, realized on the standard basis.
inline RationalLattice lattice_from_gram(const Matrix& gram) {
  return RationalLattice(gram, identity_matrix(gram.size()));
}

/// Z^n with the identity form.
inline RationalLattice standard_lattice(std::size_t n) { return lattice_from_gram(identity_matrix(n)); }

inline Matrix gram(const RationalLattice& lattice) {
  const auto& b = lattice.basis();
  const std::size_t n = b.size();
  Matrix fb = multiply(b, lattice.form(), lattice.ambient_dimension());
  Matrix g = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < lattice.ambient_dimension(); ++k) acc += fb[i][k] * b[j][k];
      g[i][j] = acc;
    }
  return g;
}

inline Rational det_gram(const RationalLattice& lattice) { return determinant(gram(lattice)); }

inline bool is_nondegenerate(const RationalLattice& lattice) { return det_gram(lattice) != 0; }

inline bool is_integral(const RationalLattice& lattice) {
  for (const auto& row : gram(lattice))
    for (const auto& x : row)
      if (!is_integer(x)) return false;
  return true;
}

/// Every vector has integral norm: integral diagonal, half-integral off-diagonal.
inline bool has_integral_norms(const RationalLattice& lattice) {
  auto g = gram(lattice);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (!is_integer(i == j ? g[i][j] : 2 * g[i][j])) return false;
  return true;
}

inline bool is_even(const RationalLattice& lattice) {
  if (!is_integral(lattice)) return false;
  auto g = gram(lattice);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i][i].get_num() % 2 != 0) return false;
  return true;
}

inline bool is_positive_definite(const RationalLattice& lattice) { return is_positive_definite(gram(lattice)); }

inline bool is_unimodular(const RationalLattice& lattice) { return abs(det_gram(lattice)) == 1; }

/// Coordinates of `vectors` (ambient rows) in the lattice basis, or nullopt
/// when some vector is outside the rational span.
inline std::optional<Matrix> coordinates_in(const RationalLattice& lattice, const Matrix& vectors) {
  return solve_left(vectors, lattice.basis(), lattice.ambient_dimension());
}

inline bool contains_all(const RationalLattice& lattice, const Matrix& vectors) {
  auto coords = coordinates_in(lattice, vectors);
  if (!coords) return false;
  for (const auto& row : *coords)
    for (const auto& x : row)
      if (!is_integer(x)) return false;
  return true;
}

/// inner is a subgroup of outer (same ambient space required).
inline bool is_sublattice(const RationalLattice& inner, const RationalLattice& outer) {
  if (inner.form() != outer.form()) return false;
  return contains_all(outer, inner.basis());
}

inline bool operator==(const RationalLattice& a, const RationalLattice& b) {
  return a.rank() == b.rank() && is_sublattice(a, b) && is_sublattice(b, a);
}

/// L° = {v in L_Q : (v, L) in Z}, with the dual basis gram^{-1} * B.
inline RationalLattice dual_lattice(const RationalLattice& lattice) {
  auto inv = inverse(gram(lattice));
  if (!inv) throw Error(ErrorKind::DegenerateLattice, "dual of a degenerate lattice is not a lattice");
  return RationalLattice(lattice.form(), multiply(*inv, lattice.basis(), lattice.ambient_dimension()));
}

/// Self-dual as integral + unimodular; the mutual-inclusion test L° = L must agree.
inline bool is_self_dual(const RationalLattice& lattice) {
  return is_nondegenerate(lattice) && is_integral(lattice) && is_unimodular(lattice);
}

/// Z-span of arbitrary (possibly dependent) rational generator rows.
inline RationalLattice span_lattice(const Matrix& form, const Matrix& generators) {
  const std::size_t m = form.size();
  Integer den = 1;
  for (const auto& row : generators)
    for (const auto& x : row) den = lcm_of(den, x.get_den());
  IntMatrix scaled;
  for (const auto& row : generators) {
    IntVector r;
    for (const auto& x : row) r.push_back(Integer(x * den));
    scaled.push_back(std::move(r));
  }
  Matrix basis;
  for (const auto& row : hermite_basis(std::move(scaled), m)) {
    Vector r;
    for (const auto& x : row) r.push_back(Rational(x) / den);
    basis.push_back(std::move(r));
  }
  return RationalLattice(form, std::move(basis));
}

struct ShortVector {
  std::vector<std::int64_t> coordinates;  // in the lattice basis
  Rational norm;
};

struct ShortVectorReport {
  Rational bound;
  std::vector<ShortVector> entries;
};

namespace detail {

inline Integer from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Integer out = hi * Integer("18446744073709551616") + Integer(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  return negative ? Integer(-out) : out;
}

/// Fincke-Pohst enumeration of all x in Z^n with Q(x + shift) <= bound, for a
/// positive definite Gram matrix Q. The search tree is pruned in floating
/// point against a slightly inflated bound; every leaf is then re-checked with
/// exact integer arithmetic, so `visit(x, norm)` sees exactly the right set
/// with exact norms.
template <typename Visitor>
void enumerate_shifted(const Matrix& g, const Vector& shift, const Rational& bound, Visitor&& visit) {
  const std::size_t n = g.size();
  if (n == 0) {
    if (bound >= 0) visit(std::vector<std::int64_t>{}, Rational(0));
    return;
  }
  auto f = ldl(g);
  if (!f.complete || std::any_of(f.pivots.begin(), f.pivots.end(), [](const Rational& d) { return d <= 0; }))
    throw Error(ErrorKind::NotPositiveDefinite, "enumeration needs a positive definite form");
  if (bound < 0) return;

  // Q = gi / gd and shift = si / sd, so Q(x + shift) = z^T gi z / (gd sd^2) with z = sd x + si.
  Integer gd = 1, sd = 1;
  for (const auto& row : g)
    for (const auto& x : row) gd = lcm_of(gd, x.get_den());
  for (const auto& x : shift) sd = lcm_of(sd, x.get_den());
  IntMatrix gi(n, IntVector(n));
  IntVector si(n);
  Integer gmax = 0;
  for (std::size_t i = 0; i < n; ++i) {
    si[i] = Integer(shift[i] * sd);
    for (std::size_t j = 0; j < n; ++j) {
      gi[i][j] = Integer(g[i][j] * gd);
      if (abs(gi[i][j]) > gmax) gmax = abs(gi[i][j]);
    }
  }
  const Integer scale = gd * sd * sd;
  const Rational scaled_bound = bound * scale;

  // Native fast path when |z_i| <= z_limit keeps every partial sum below 2^120.
  bool native = sd.fits_slong_p() && gmax.fits_slong_p();
  for (const auto& x : si) native = native && x.fits_slong_p();
  std::int64_t z_limit = 0;
  if (native) {
    const double lim = std::sqrt(std::ldexp(1.0, 120) / (static_cast<double>(n * n) * std::max(1.0, gmax.get_d())));
    z_limit = static_cast<std::int64_t>(std::min(lim / 2, 4e18));
  }
  std::vector<std::vector<std::int64_t>> g64(n, std::vector<std::int64_t>(n, 0));
  std::vector<std::int64_t> s64(n, 0);
  const std::int64_t sd64 = native ? sd.get_si() : 0;
  if (native)
    for (std::size_t i = 0; i < n; ++i) {
      s64[i] = si[i].get_si();
      for (std::size_t j = 0; j < n; ++j) g64[i][j] = gi[i][j].get_si();
    }

  std::vector<double> piv(n), sh(n);
  std::vector<std::vector<double>> up(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    piv[i] = f.pivots[i].get_d();
    sh[i] = shift[i].get_d();
    for (std::size_t j = i + 1; j < n; ++j) up[i][j] = f.upper[i][j].get_d();
  }
  const double bound_d = bound.get_d() * (1 + 1e-9) + 1e-9;

  std::vector<std::int64_t> x(n, 0);
  std::vector<double> y(n, 0.0);  // x + shift at fixed levels
  std::vector<std::int64_t> z64(n);
  IntVector zbig(n);

  auto leaf = [&] {
    bool small = native;
    if (small)
      for (std::size_t i = 0; i < n; ++i) {
        const __int128 z = static_cast<__int128>(sd64) * x[i] + s64[i];
        if (z > z_limit || z < -z_limit) {
          small = false;
          break;
        }
        z64[i] = static_cast<std::int64_t>(z);
      }
    Integer total;
    if (small) {
      __int128 acc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (z64[i] == 0) continue;
        __int128 row = 0;
        for (std::size_t j = 0; j < n; ++j) row += static_cast<__int128>(g64[i][j]) * z64[j];
        acc += row * z64[i];
      }
      total = from_int128(acc);
    } else {
      for (std::size_t i = 0; i < n; ++i) zbig[i] = sd * x[i] + si[i];
      total = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) total += zbig[i] * gi[i][j] * zbig[j];
    }
    if (Rational(total) > scaled_bound) return;
    Rational norm(total, scale);
    norm.canonicalize();
    visit(std::as_const(x), std::as_const(norm));
  };

  auto recurse = [&](auto&& self, std::size_t level, double partial) -> void {
    const std::size_t i = level - 1;
    double center = -sh[i];
    for (std::size_t j = i + 1; j < n; ++j) center -= up[i][j] * y[j];
    const double slack = (bound_d - partial) / piv[i];
    if (slack < 0) return;
    const double r = std::sqrt(slack);
    const auto lo = static_cast<std::int64_t>(std::ceil(center - r));
    const auto hi = static_cast<std::int64_t>(std::floor(center + r));
    for (std::int64_t k = lo; k <= hi; ++k) {
      x[i] = k;
      y[i] = static_cast<double>(k) + sh[i];
      const double diff = static_cast<double>(k) - center;
      const double next = partial + piv[i] * diff * diff;
      if (i == 0)
        leaf();
      else
        self(self, i, next);
    }
  };
  recurse(recurse, n, 0.0);
}

inline bool short_vector_less(const ShortVector& a, const ShortVector& b) {
  if (a.norm != b.norm) return a.norm < b.norm;
  return a.coordinates < b.coordinates;
}

}  // namespace detail

/// All nonzero lattice vectors of norm at most `bound`, ordered by norm and
/// then lexicographically by coordinates.
inline ShortVectorReport short_vectors(const RationalLattice& lattice, const Rational& bound) {
  if (bound < 0) throw Error(ErrorKind::InvalidArgument, "short-vector bound must be nonnegative");
  ShortVectorReport report{bound, {}};
  const Vector zero(lattice.rank(), Rational(0));
  detail::enumerate_shifted(gram(lattice), zero, bound, [&](const std::vector<std::int64_t>& x, const Rational& norm) {
    if (norm > 0) report.entries.push_back({x, norm});
  });
  std::sort(report.entries.begin(), report.entries.end(), detail::short_vector_less);
  return report;
}

/// sum over x of q^{Q(x + shift)/2}, exact up to exponent `order`. `shift` is
/// given in lattice-basis coordinates.
inline QSeries shifted_theta_series(const Matrix& g, const Vector& shift, const Rational& order) {
  std::map<Rational, Integer> counts;
  detail::enumerate_shifted(g, shift, 2 * order, [&](const std::vector<std::int64_t>&, const Rational& norm) {
    counts[norm / 2] += 1;
  });
  return QSeries::truncated(std::move(counts), order);
}

/// Theta series sum_{v in L} q^{(v,v)/2} up to exponent `order` (inclusive).
inline QSeries theta_series(const RationalLattice& lattice, const Rational& order) {
  return shifted_theta_series(gram(lattice), Vector(lattice.rank(), Rational(0)), order);
}

}  // namespace triad
