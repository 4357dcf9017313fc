#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triad/error.hpp"
#include "triad/lattices.hpp"

namespace triad {

/// An element of D = Z/d_1 x ... x Z/d_r, coordinates reduced into [0, d_i).
using Sector = std::vector<std::int64_t>;

/// Ties a module to the even lattice L with L°/L equal to it.
struct LatticeRealization {
  RationalLattice lattice;
  /// Row i of `to_module`, dotted with the dual coordinates y_j = (v, b_j) of a
  /// vector v in L°, gives coordinate i of its class (before reduction).
  IntMatrix to_module;
  /// Dual coordinates of a representative of each generator.
  IntMatrix generator_dual_coordinates;
};

/// Finite quadratic module (D, q, B, c). q and B take values in Q/Z and are
/// stored as representatives in [0, 1).
class QuadraticModule {
 public:
  QuadraticModule() { cache(); }

  std::size_t generator_count() const noexcept { return orders_.size(); }
  const std::vector<std::int64_t>& orders() const noexcept { return orders_; }
  const std::vector<Rational>& q_generators() const noexcept { return q_; }
  const Matrix& b_generators() const noexcept { return b_; }
  const Rational& central_charge() const noexcept { return central_charge_; }
  const std::shared_ptr<const LatticeRealization>& realization() const noexcept { return realization_; }

  std::uint64_t group_order() const {
    std::uint64_t total = 1;
    for (auto d : orders_) {
      if (total > UINT64_MAX / static_cast<std::uint64_t>(d))
        throw Error(ErrorKind::EnumerationCapExceeded, "group order overflows 64 bits");
      total *= static_cast<std::uint64_t>(d);
    }
    return total;
  }

  /// Common denominator N of all values of q and B (numerators are mod N).
  std::int64_t denominator() const noexcept { return denominator_; }

  Sector zero() const { return Sector(orders_.size(), 0); }

  Sector reduce(Sector x) const {
    if (x.size() != orders_.size())
      throw Error(ErrorKind::LengthMismatch, "sector has " + std::to_string(x.size()) + " coordinates, module has " +
                                                 std::to_string(orders_.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] %= orders_[i];
      if (x[i] < 0) x[i] += orders_[i];
    }
    return x;
  }

  Sector add(const Sector& a, const Sector& b) const {
    Sector s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = (a[i] + b[i]) % orders_[i];
    return s;
  }

  Sector negate(const Sector& a) const {
    Sector s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
    return s;
  }

  /// Generator i as a sector.
  Sector generator(std::size_t i) const {
    Sector s = zero();
    s[i] = 1 % orders_[i];
    return s;
  }

  /// B(a, b) times the common denominator, reduced mod that denominator.
  std::int64_t bilinear_numerator(const Sector& a, const Sector& b) const {
    __int128 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        acc = (acc + static_cast<__int128>(a[i]) * b[j] % denominator_ * b_num_[i][j]) % denominator_;
      }
    }
    return static_cast<std::int64_t>(acc);
  }

  std::int64_t quadratic_numerator(const Sector& a) const {
    __int128 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      acc = (acc + static_cast<__int128>(a[i]) * a[i] % denominator_ * q_num_[i]) % denominator_;
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (a[j] != 0) acc = (acc + static_cast<__int128>(a[i]) * a[j] % denominator_ * b_num_[i][j]) % denominator_;
    }
    return static_cast<std::int64_t>(acc);
  }

  /// B(a, b) mod Z, in [0, 1).
  Rational bilinear(const Sector& a, const Sector& b) const {
    return mod_one(make_rational(bilinear_numerator(reduce(a), reduce(b)), denominator_));
  }

  /// q(a) mod Z, in [0, 1).
  Rational quad(const Sector& a) const { return mod_one(make_rational(quadratic_numerator(reduce(a)), denominator_)); }

  /// Every element in mixed-radix order (first coordinate fastest).
  template <typename Visitor>
  void for_each_element(Visitor&& visit, std::uint64_t cap) const {
    if (group_order() > cap)
      throw Error(ErrorKind::EnumerationCapExceeded,
                  "group of order " + std::to_string(group_order()) + " exceeds the enumeration cap " + std::to_string(cap));
    Sector x = zero();
    for (;;) {
      visit(std::as_const(x));
      std::size_t i = 0;
      while (i < x.size() && ++x[i] == orders_[i]) x[i++] = 0;
      if (i == x.size()) return;
    }
  }

  friend bool operator==(const QuadraticModule& a, const QuadraticModule& b) {
    return a.orders_ == b.orders_ && a.q_ == b.q_ && a.b_ == b.b_ && a.central_charge_ == b.central_charge_;
  }

  friend QuadraticModule build_quadratic_module(std::vector<std::int64_t>, std::vector<Rational>, Matrix, Rational,
                                                std::shared_ptr<const LatticeRealization>);

 private:
  void cache() {
    // 2 * d_i * q_i and d_i * B_ij are integers, so 2 * lcm(d) clears all denominators.
    std::int64_t l = 1;
    for (auto d : orders_) l = std::lcm(l, d);
    denominator_ = 2 * l;
    q_num_.assign(orders_.size(), 0);
    b_num_.assign(orders_.size(), std::vector<std::int64_t>(orders_.size(), 0));
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      q_num_[i] = to_int64(Integer(q_[i] * denominator_));
      for (std::size_t j = 0; j < orders_.size(); ++j) b_num_[i][j] = to_int64(Integer(b_[i][j] * denominator_));
    }
  }

  std::vector<std::int64_t> orders_;
  std::vector<Rational> q_;
  Matrix b_;
  Rational central_charge_ = 0;
  std::shared_ptr<const LatticeRealization> realization_;

  std::int64_t denominator_ = 2;
  std::vector<std::int64_t> q_num_;
  std::vector<std::vector<std::int64_t>> b_num_;
};

/// Validates and builds a module. Throws IllFormedQuadraticForm naming the
/// violated condition.
inline QuadraticModule build_quadratic_module(std::vector<std::int64_t> orders, std::vector<Rational> q_gen,
                                              Matrix b_gen, Rational central_charge,
                                              std::shared_ptr<const LatticeRealization> realization = nullptr) {
  const std::size_t r = orders.size();
  auto fail = [](const std::string& why) { throw Error(ErrorKind::IllFormedQuadraticForm, why); };
  if (q_gen.size() != r) fail("expected " + std::to_string(r) + " generator values of q");
  if (b_gen.size() != r) fail("bilinear matrix must be " + std::to_string(r) + "x" + std::to_string(r));
  for (const auto& row : b_gen)
    if (row.size() != r) fail("bilinear matrix must be " + std::to_string(r) + "x" + std::to_string(r));
  for (std::size_t i = 0; i < r; ++i) {
    const auto label = "generator " + std::to_string(i);
    if (orders[i] < 1) fail(label + ": order must be >= 1");
    const Rational d(static_cast<long>(orders[i]));
    if (!is_integer(2 * d * q_gen[i])) fail(label + ": 2*d*q(g) is not an integer");
    if (!is_integer(d * d * q_gen[i])) fail(label + ": d^2*q(g) is not an integer");
    if (mod_one(b_gen[i][i]) != mod_one(2 * q_gen[i])) fail(label + ": B(g,g) is not 2*q(g) mod Z");
    for (std::size_t j = 0; j < r; ++j) {
      if (!is_integer(d * b_gen[i][j])) fail(label + ": d*B(g_i,g_j) is not an integer for j=" + std::to_string(j));
      if (mod_one(b_gen[i][j]) != mod_one(b_gen[j][i])) fail("bilinear matrix is not symmetric mod Z");
    }
  }
  QuadraticModule m;
  m.orders_ = std::move(orders);
  for (auto& x : q_gen) x = mod_one(x);
  for (auto& row : b_gen)
    for (auto& x : row) x = mod_one(x);
  m.q_ = std::move(q_gen);
  m.b_ = std::move(b_gen);
  m.central_charge_ = std::move(central_charge);
  m.realization_ = std::move(realization);
  m.cache();
  return m;
}

/// The discriminant form L°/L of an even nondegenerate lattice, with cyclic
/// orders from the Smith normal form of the Gram matrix (invariant factors
/// equal to 1 are dropped), q(x) = (x,x)/2 mod Z, and central charge rank(L).
inline QuadraticModule discriminant_form(const RationalLattice& lattice) {
  if (!is_even(lattice)) throw Error(ErrorKind::NotEvenLattice, "discriminant form needs an even lattice");
  const Matrix g = gram(lattice);
  auto g_inv = inverse(g);
  if (!g_inv) throw Error(ErrorKind::DegenerateLattice, "discriminant form needs a nondegenerate lattice");
  const std::size_t n = g.size();
  IntMatrix gi(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gi[i][j] = Integer(g[i][j]);

  // y in Z^n (dual coordinates) lies in L = G Z^n iff U y lies in S Z^n.
  auto snf = smith_normal_form(gi, n);
  auto u_inv = inverse([&] {
    Matrix u(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) u[i][j] = Rational(snf.u[i][j]);
    return u;
  }());

  auto realization = std::make_shared<LatticeRealization>();
  realization->lattice = lattice;
  std::vector<std::int64_t> orders;
  std::vector<Vector> reps;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer d = snf.s[i][i];
    if (d == 1) continue;
    orders.push_back(to_int64(d));
    realization->to_module.push_back(snf.u[i]);
    Vector y(n);
    IntVector yi(n);
    for (std::size_t k = 0; k < n; ++k) {
      y[k] = (*u_inv)[k][i];
      yi[k] = Integer(y[k]);
    }
    reps.push_back(std::move(y));
    realization->generator_dual_coordinates.push_back(std::move(yi));
  }
  const std::size_t r = orders.size();
  std::vector<Rational> q(r);
  Matrix b = zero_matrix(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    q[i] = mod_one(bilinear(reps[i], *g_inv, reps[i]) / 2);
    for (std::size_t j = 0; j < r; ++j) b[i][j] = mod_one(bilinear(reps[i], *g_inv, reps[j]));
  }
  return build_quadratic_module(std::move(orders), std::move(q), std::move(b),
                                Rational(static_cast<long>(lattice.rank())), std::move(realization));
}

namespace detail {

inline const LatticeRealization& require_realization(const QuadraticModule& module) {
  if (!module.realization())
    throw Error(ErrorKind::NoLatticeRealization, "module has no lattice realization");
  return *module.realization();
}

}  // namespace detail

/// Class in L°/L of an ambient vector v in L°.
inline Sector coset_of(const QuadraticModule& module, const Vector& ambient) {
  const auto& real = detail::require_realization(module);
  const auto& lat = real.lattice;
  Vector fv(lat.ambient_dimension(), Rational(0));
  for (std::size_t i = 0; i < fv.size(); ++i)
    for (std::size_t j = 0; j < fv.size(); ++j) fv[i] += lat.form()[i][j] * ambient[j];
  IntVector y;
  for (const auto& row : lat.basis()) {
    Rational acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * fv[j];
    if (!is_integer(acc)) throw Error(ErrorKind::InclusionViolation, "vector is not in the dual lattice");
    y.push_back(acc.get_num());
  }
  Sector s;
  for (std::size_t i = 0; i < real.to_module.size(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < y.size(); ++j) acc += real.to_module[i][j] * y[j];
    s.push_back(to_int64(mod_floor(acc, Integer(static_cast<long>(module.orders()[i])))));
  }
  return s;
}

/// Lattice-basis coordinates of a representative of `sector` in L°.
inline Vector coset_representative(const QuadraticModule& module, const Sector& sector) {
  const auto& real = detail::require_realization(module);
  const Matrix g = gram(real.lattice);
  const std::size_t n = g.size();
  Vector y(n, Rational(0));
  for (std::size_t i = 0; i < sector.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) y[k] += Rational(sector[i]) * Rational(real.generator_dual_coordinates[i][k]);
  return multiply(y, *inverse(g), n);
}

}  // namespace triad
