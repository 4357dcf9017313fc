#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "triad/error.hpp"
#include "triad/qseries.hpp"
#include "triad/quadratic_module.hpp"

// Abelian sector model of a completely-extendable algebra: the complete
// extension is a finite quadratic module D, the algebra is a subgroup A of D,
// and the intertwining exponents between sectors a and b lie in B(a, b) + Z.

namespace triad {

namespace detail {

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// s*a + t*b = g = gcd(a, b) > 0 for (a, b) != (0, 0).
inline std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

/// Hermite basis of span(gens) + diag(orders) Z^r. Every such lattice has full
/// rank, so the result is r x r upper triangular with pivots p_i | d_i and
/// h[k][j] in [0, p_j) for k < j.
inline std::vector<std::vector<std::int64_t>> sector_hermite(const std::vector<std::int64_t>& orders,
                                                             std::vector<std::vector<std::int64_t>> gens) {
  const std::size_t r = orders.size();
  auto reduce_tail = [&](std::vector<std::int64_t>& v, std::size_t from) {
    for (std::size_t j = from; j < r; ++j) v[j] = floor_mod(v[j], orders[j]);
  };
  for (auto& g : gens) reduce_tail(g, 0);
  std::vector<std::vector<std::int64_t>> h;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::int64_t> pivot(r, 0);
    pivot[i] = orders[i];
    for (auto& v : gens) {
      if (v[i] == 0) continue;
      std::int64_t s, t;
      const std::int64_t g = egcd(pivot[i], v[i], s, t);
      const std::int64_t u = pivot[i] / g, w = v[i] / g;
      for (std::size_t j = i; j < r; ++j) {
        const __int128 x = pivot[j], y = v[j];
        pivot[j] = static_cast<std::int64_t>(floor_mod(static_cast<std::int64_t>((s * x + t * y) % orders[j]), orders[j]));
        v[j] = static_cast<std::int64_t>(floor_mod(static_cast<std::int64_t>((u * y - w * x) % orders[j]), orders[j]));
      }
      pivot[i] = g;  // g divides d_i, so the reduction above must not wrap it to zero
      v[i] = 0;
    }
    reduce_tail(pivot, i + 1);
    h.push_back(std::move(pivot));
  }
  for (std::size_t j = 1; j < r; ++j)
    for (std::size_t k = 0; k < j; ++k) {
      const std::int64_t q = h[k][j] >= 0 ? h[k][j] / h[j][j] : -((-h[k][j] + h[j][j] - 1) / h[j][j]);
      if (q == 0) continue;
      for (std::size_t l = j; l < r; ++l) h[k][l] -= q * h[j][l];
      for (std::size_t l = j + 1; l < r; ++l) h[k][l] = floor_mod(h[k][l], orders[l]);
    }
  return h;
}

}  // namespace detail

/// A subgroup A of the module's group D, held canonically as the Hermite basis
/// of its preimage in Z^r. Equal subgroups have equal representations.
class SectorSet {
 public:
  SectorSet(std::shared_ptr<const QuadraticModule> module, const std::vector<Sector>& generators)
      : module_(std::move(module)) {
    std::vector<std::vector<std::int64_t>> gens;
    for (const auto& g : generators) gens.push_back(module_->reduce(g));
    hermite_ = detail::sector_hermite(module_->orders(), std::move(gens));
  }

  const QuadraticModule& module() const noexcept { return *module_; }
  const std::shared_ptr<const QuadraticModule>& module_ptr() const noexcept { return module_; }
  const std::vector<std::vector<std::int64_t>>& hermite_rows() const noexcept { return hermite_; }

  /// Nonzero canonical generators (Hermite rows reduced into D).
  std::vector<Sector> generators() const {
    std::vector<Sector> out;
    for (const auto& row : hermite_) {
      Sector s = module_->reduce(row);
      if (std::any_of(s.begin(), s.end(), [](std::int64_t x) { return x != 0; })) out.push_back(std::move(s));
    }
    return out;
  }

  std::uint64_t order() const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < hermite_.size(); ++i)
      total *= static_cast<std::uint64_t>(module_->orders()[i] / hermite_[i][i]);
    return total;
  }

  bool contains(const Sector& element) const {
    const auto& d = module_->orders();
    Sector x = module_->reduce(element);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] % hermite_[i][i] != 0) return false;
      const std::int64_t c = x[i] / hermite_[i][i];
      for (std::size_t j = i; j < x.size(); ++j)
        x[j] = detail::floor_mod(static_cast<std::int64_t>((x[j] - static_cast<__int128>(c) * hermite_[i][j]) % d[j]), d[j]);
    }
    return true;
  }

  /// Each element exactly once: sum_i c_i h_i mod d with 0 <= c_i < d_i / p_i.
  template <typename Visitor>
  void for_each_element(Visitor&& visit, std::uint64_t cap = kDefaultEnumerationCap) const {
    if (order() > cap)
      throw Error(ErrorKind::EnumerationCapExceeded,
                  "subgroup of order " + std::to_string(order()) + " exceeds the enumeration cap " + std::to_string(cap));
    const auto& d = module_->orders();
    const std::size_t r = d.size();
    std::vector<std::int64_t> c(r, 0), limit(r);
    for (std::size_t i = 0; i < r; ++i) limit[i] = d[i] / hermite_[i][i];
    for (;;) {
      Sector x(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) x[j] = (x[j] + c[i] * hermite_[i][j]) % d[j];
      visit(std::as_const(x));
      std::size_t i = 0;
      while (i < r && ++c[i] == limit[i]) c[i++] = 0;
      if (i == r) return;
    }
  }

  std::vector<Sector> elements(std::uint64_t cap = kDefaultEnumerationCap) const {
    std::vector<Sector> out;
    for_each_element([&](const Sector& x) { out.push_back(x); }, cap);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_subset_of(const SectorSet& other) const {
    for (const auto& g : generators())
      if (!other.contains(g)) return false;
    return true;
  }

  friend bool operator==(const SectorSet& a, const SectorSet& b) {
    return a.hermite_ == b.hermite_ && *a.module_ == *b.module_;
  }

 private:
  std::shared_ptr<const QuadraticModule> module_;
  std::vector<std::vector<std::int64_t>> hermite_;
};

/// Smallest subgroup containing `generators` (the empty list gives {0}).
inline SectorSet subgroup_span(std::shared_ptr<const QuadraticModule> module, const std::vector<Sector>& generators) {
  return SectorSet(std::move(module), generators);
}

/// The complete extension: all of D.
inline SectorSet complete_extension(std::shared_ptr<const QuadraticModule> module) {
  std::vector<Sector> gens;
  for (std::size_t i = 0; i < module->generator_count(); ++i) gens.push_back(module->generator(i));
  return SectorSet(std::move(module), gens);
}

/// A° = {b in D : B(a, b) = 0 mod Z for all a in A}: the sectors whose
/// intertwining operators with every sector of A have integral exponents.
/// Computed as the kernel of b -> (N B(g, b))_g mod N over the generators g.
inline SectorSet dual_sectors(const SectorSet& sectors) {
  const auto& module = sectors.module();
  const std::size_t r = module.generator_count();
  const auto gens = sectors.generators();
  const std::size_t k = gens.size();
  // N * B(g, e_j) for each generator g and unit vector e_j.
  std::vector<std::vector<std::int64_t>> w(k, std::vector<std::int64_t>(r));
  const std::int64_t modulus = module.denominator();
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t j = 0; j < r; ++j) w[g][j] = module.bilinear_numerator(gens[g], module.generator(j));

  // Rows [w_{.j} | e_j] and [N e_g | 0]; echelon rows with zero left block span the kernel.
  IntMatrix m;
  for (std::size_t j = 0; j < r; ++j) {
    IntVector row(k + r, Integer(0));
    for (std::size_t g = 0; g < k; ++g) row[g] = Integer(static_cast<long>(w[g][j]));
    row[k + j] = 1;
    m.push_back(std::move(row));
  }
  for (std::size_t g = 0; g < k; ++g) {
    IntVector row(k + r, Integer(0));
    row[g] = Integer(static_cast<long>(modulus));
    m.push_back(std::move(row));
  }
  std::vector<Sector> kernel;
  for (const auto& row : hermite_basis(std::move(m), k + r)) {
    bool left_zero = true;
    for (std::size_t g = 0; g < k; ++g)
      if (row[g] != 0) left_zero = false;
    if (!left_zero) continue;
    Sector s(r);
    for (std::size_t j = 0; j < r; ++j)
      s[j] = to_int64(mod_floor(row[k + j], Integer(static_cast<long>(module.orders()[j]))));
    kernel.push_back(std::move(s));
  }
  return SectorSet(sectors.module_ptr(), kernel);
}

inline bool is_self_dual(const SectorSet& sectors) { return sectors == dual_sectors(sectors); }

/// Nondegenerate iff A = (A°)°.
inline bool is_nondegenerate(const SectorSet& sectors) { return sectors == dual_sectors(dual_sectors(sectors)); }

/// All intertwining exponents integral: B vanishes on A x A.
inline bool is_meromorphic(const SectorSet& sectors) {
  const auto gens = sectors.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      if (sectors.module().bilinear_numerator(gens[i], gens[j]) != 0) return false;
  return true;
}

/// All sector weights integral: q vanishes on A. Since q(a + b) = q(a) + q(b) + B(a, b),
/// it suffices to check q on generators and B on distinct generator pairs.
inline bool is_z_graded(const SectorSet& sectors) {
  const auto gens = sectors.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (sectors.module().quadratic_numerator(gens[i]) != 0) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (sectors.module().bilinear_numerator(gens[i], gens[j]) != 0) return false;
  }
  return true;
}

/// Every subgroup of D, in a deterministic order (by order, then representation).
inline std::vector<SectorSet> enumerate_subgroups(const std::shared_ptr<const QuadraticModule>& module,
                                                  std::uint64_t cap = std::uint64_t{1} << 12) {
  std::vector<Sector> all;
  module->for_each_element([&](const Sector& x) { all.push_back(x); }, cap);
  std::map<std::vector<std::vector<std::int64_t>>, SectorSet> seen;
  std::vector<SectorSet> frontier{subgroup_span(module, {})};
  seen.emplace(frontier.front().hermite_rows(), frontier.front());
  while (!frontier.empty()) {
    std::vector<SectorSet> next;
    for (const auto& s : frontier) {
      auto gens = s.generators();
      for (const auto& x : all) {
        if (s.contains(x)) continue;
        gens.push_back(x);
        SectorSet t = subgroup_span(module, gens);
        gens.pop_back();
        if (seen.emplace(t.hermite_rows(), t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  std::vector<SectorSet> out;
  for (auto& [key, s] : seen) out.push_back(s);
  std::stable_sort(out.begin(), out.end(), [](const SectorSet& a, const SectorSet& b) { return a.order() < b.order(); });
  return out;
}

/// A sector set together with fusion channels declared zero although the
/// complete extension allows them. The mask is closed under swapping.
class SectorAlgebra {
 public:
  using Channel = std::pair<Sector, Sector>;

  explicit SectorAlgebra(SectorSet sectors, const std::vector<Channel>& mask = {}) : sectors_(std::move(sectors)) {
    for (const auto& [a, b] : mask) {
      Sector ra = sectors_.module().reduce(a), rb = sectors_.module().reduce(b);
      if (!sectors_.contains(ra) || !sectors_.contains(rb))
        throw Error(ErrorKind::InvalidArgument, "masked channel lies outside the sector set");
      mask_.emplace(ra, rb);
      mask_.emplace(rb, ra);
    }
  }

  const SectorSet& sectors() const noexcept { return sectors_; }
  const std::set<Channel>& mask() const noexcept { return mask_; }

 private:
  SectorSet sectors_;
  std::set<Channel> mask_;
};

/// Degenerate iff not the dual of anything: a masked algebra never is (duals
/// carry the full intertwining spaces), and otherwise A must equal A°°.
inline bool is_degenerate(const SectorAlgebra& algebra) {
  return !algebra.mask().empty() || !is_nondegenerate(algebra.sectors());
}

/// eta(q)^{-m}: coefficient of q^{n - m/24} is the number of m-colored
/// partitions of n, for n <= order.
inline QSeries heisenberg_character(std::uint64_t rank, const Rational& order) {
  if (rank == 0) throw Error(ErrorKind::InvalidArgument, "free boson rank must be >= 1");
  const Rational shift(static_cast<long>(rank), 24);
  return pow(eta(order + Rational(1, 24)), -static_cast<std::int64_t>(rank)).truncate(order - shift);
}

/// Character q^{-c/24} sum_n dim W_(n) q^n of the lattice algebra on sectors
/// A: the sum of coset theta series over A divided by eta^rank. Known for
/// n <= order.
inline QSeries character(const SectorSet& sectors, const Rational& order,
                         std::uint64_t cap = kDefaultEnumerationCap) {
  const auto& module = sectors.module();
  const auto& real = detail::require_realization(module);
  const Matrix g = gram(real.lattice);
  if (!is_positive_definite(g)) throw Error(ErrorKind::NotPositiveDefinite, "character needs a positive definite lattice");
  const std::size_t n = g.size();
  const Rational shift(static_cast<long>(n), 24);
  std::vector<Vector> reps;
  for (std::size_t i = 0; i < module.generator_count(); ++i) reps.push_back(coset_representative(module, module.generator(i)));
  QSeries theta = QSeries::truncated({}, order);
  sectors.for_each_element(
      [&](const Sector& a) {
        Vector shift(n, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != 0)
            for (std::size_t k = 0; k < n; ++k) shift[k] += Rational(static_cast<long>(a[i])) * reps[i][k];
        theta = theta + shifted_theta_series(g, shift, order);
      },
      cap);
  if (n == 0) return theta.truncate(order);
  QSeries inv_eta = pow(eta(order + Rational(1, 24)), -static_cast<std::int64_t>(n));
  return (theta * inv_eta).truncate(order - shift);
}

}  // namespace triad
