#pragma once

// Brute-force reference computations used to check the library. None of these
// call the algorithm they are checking.

#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "triad/triad.hpp"

namespace oracle {

using triad::Integer;
using triad::Rational;

/// Integer polynomial in q, coefficient i at index i.
using Poly = std::vector<Integer>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Poly poly_pow(const Poly& a, std::size_t k) {
  Poly out{Integer(1)};
  for (std::size_t i = 0; i < k; ++i) out = poly_mul(out, a);
  return out;
}

/// Weight distribution of the dual from 2^{-k} sum_w A_w (1 - q)^w (1 + q)^{n - w}.
inline std::vector<Integer> macwilliams(const std::vector<std::uint64_t>& a, std::size_t n, std::size_t k) {
  Poly total(n + 1, Integer(0));
  for (std::size_t w = 0; w <= n; ++w) {
    if (a[w] == 0) continue;
    Poly term = poly_mul(poly_pow({Integer(1), Integer(-1)}, w), poly_pow({Integer(1), Integer(1)}, n - w));
    for (std::size_t i = 0; i <= n; ++i) total[i] += term[i] * Integer(static_cast<unsigned long>(a[w]));
  }
  const Integer scale = Integer(1) << static_cast<unsigned>(k);
  for (auto& c : total) {
    if (c % scale != 0) throw std::logic_error("MacWilliams transform is not integral");
    c /= scale;
  }
  return total;
}

/// All codewords by summing every subset of generators (no Gray code).
inline std::set<std::string> codewords(const triad::BinaryCode& code) {
  std::set<std::string> out;
  const auto& g = code.generators();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()); ++m) {
    triad::BitWord w(code.length());
    for (std::size_t i = 0; i < g.size(); ++i)
      if ((m >> i) & 1) w ^= g[i];
    out.insert(w.to_string());
  }
  return out;
}

/// Words of F_2^n orthogonal to every generator, by exhausting F_2^n.
inline std::set<std::string> dual_words(const triad::BinaryCode& code) {
  std::set<std::string> out;
  const std::size_t n = code.length();
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    triad::BitWord w(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((v >> i) & 1) w.set(i);
    bool ok = true;
    for (const auto& g : code.generators()) ok = ok && !w.dot(g);
    if (ok) out.insert(w.to_string());
  }
  return out;
}

/// Norm counts of E8 as D8 + (D8 + 1/2), coordinates scaled by 2 so that
/// vectors are integer: counts[m] = #{v : (v, v) = 2m}, m <= max_half_norm.
inline std::vector<std::uint64_t> e8_counts(int max_half_norm) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_half_norm) + 1, 0);
  const int limit = 2 * max_half_norm;  // (v, v) <= limit, i.e. sum (2v_i)^2 <= 4 limit
  std::vector<int> c(8);
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<int> values;
    for (int x = -2 * limit; x <= 2 * limit; ++x)
      if ((x & 1) == parity && x * x <= 4 * limit) values.push_back(x);
    auto rec = [&](auto&& self, std::size_t i, int sum_sq, int sum) -> void {
      if (sum_sq > 4 * limit) return;
      if (i == 8) {
        if (sum % 4 != 0) return;  // coordinate sum even
        if (sum_sq % 8 != 0) return;
        counts[static_cast<std::size_t>(sum_sq / 8)] += 1;
        return;
      }
      for (int x : values) self(self, i + 1, sum_sq + x * x, sum + x);
    };
    rec(rec, 0, 0, 0);
  }
  return counts;
}

/// Partition numbers p(0..n) from Euler's pentagonal recurrence.
inline std::vector<Integer> partitions(std::size_t n) {
  std::vector<Integer> p(n + 1, Integer(0));
  p[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<long>(i)) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      p[i] += sign * p[i - static_cast<std::size_t>(g1)];
      if (g2 <= static_cast<long>(i)) p[i] += sign * p[i - static_cast<std::size_t>(g2)];
    }
  }
  return p;
}

/// m-colored partitions as the m-fold convolution power of p(n).
inline std::vector<Integer> colored(std::size_t n, std::size_t m) {
  const auto p = partitions(n);
  std::vector<Integer> out(n + 1, Integer(0));
  out[0] = 1;
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<Integer> next(n + 1, Integer(0));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; i + j <= n; ++j) next[i + j] += out[i] * p[j];
    out = next;
  }
  return out;
}

/// |L°/L| and the multiset of q-values, from lattice coordinates of the
/// dual basis reduced mod 1 (one canonical representative per class).
struct CosetCensus {
  std::size_t order = 0;
  std::map<Rational, std::size_t> q_values;
};

inline CosetCensus coset_census(const triad::Matrix& gram) {
  const std::size_t n = gram.size();
  const auto inv = *triad::inverse(gram);
  auto reduce = [](triad::Vector v) {
    for (auto& x : v) x = triad::mod_one(x);
    return v;
  };
  std::set<triad::Vector> seen{triad::Vector(n, Rational(0))};
  std::deque<triad::Vector> queue{triad::Vector(n, Rational(0))};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      triad::Vector w = v;
      for (std::size_t i = 0; i < n; ++i) w[i] += inv[i][j];
      w = reduce(w);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  CosetCensus c;
  c.order = seen.size();
  for (const auto& t : seen) c.q_values[triad::mod_one(triad::bilinear(t, gram, t) / 2)] += 1;
  return c;
}

/// All elements of a module's group.
inline std::vector<triad::Sector> elements(const triad::QuadraticModule& m) {
  std::vector<triad::Sector> out;
  m.for_each_element([&](const triad::Sector& x) { out.push_back(x); }, 1u << 20);
  return out;
}

inline std::set<triad::Sector> as_set(const triad::SectorSet& s) {
  auto e = s.elements();
  return {e.begin(), e.end()};
}

/// A° by filtering all of D.
inline std::set<triad::Sector> dual_by_filter(const triad::QuadraticModule& m, const std::set<triad::Sector>& a) {
  std::set<triad::Sector> out;
  for (const auto& b : elements(m)) {
    bool ok = true;
    for (const auto& x : a) ok = ok && m.bilinear(x, b) == 0;
    if (ok) out.insert(b);
  }
  return out;
}

/// Closure of a set of elements under addition.
inline std::set<triad::Sector> closure(const triad::QuadraticModule& m, std::set<triad::Sector> s) {
  s.insert(m.zero());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<triad::Sector> items(s.begin(), s.end());
    for (const auto& x : items)
      for (const auto& y : items)
        if (s.insert(m.add(x, y)).second) grew = true;
  }
  return s;
}

/// Every subgroup of D as an explicit element set.
inline std::set<std::set<triad::Sector>> subgroups(const triad::QuadraticModule& m) {
  const auto all = elements(m);
  std::set<std::set<triad::Sector>> found{{m.zero()}};
  std::vector<std::set<triad::Sector>> frontier{{m.zero()}};
  while (!frontier.empty()) {
    std::vector<std::set<triad::Sector>> next;
    for (const auto& s : frontier)
      for (const auto& x : all) {
        if (s.count(x)) continue;
        auto t = s;
        t.insert(x);
        t = closure(m, t);
        if (found.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  return found;
}

// ---- random families (fixed seeds in callers) ----

inline triad::BinaryCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t rows, bool even = false) {
  std::vector<triad::BitWord> gens;
  std::bernoulli_distribution bit(0.5);
  for (std::size_t r = 0; r < rows; ++r) {
    triad::BitWord w(n);
    for (std::size_t i = 0; i < n; ++i)
      if (bit(rng)) w.set(i);
    if (even && w.weight() % 2) w.flip(n - 1);
    gens.push_back(w);
  }
  return triad::BinaryCode::canonicalize(n, gens);
}

inline Rational random_rational(std::mt19937_64& rng, long max_abs = 10) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs), den(1, max_abs);
  return triad::make_rational(num(rng), den(rng));
}

/// Random rational lattice of rank n in Q^n (possibly degenerate).
inline triad::RationalLattice random_lattice(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    triad::Matrix form = triad::zero_matrix(n, n), basis = triad::zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) form[i][j] = form[j][i] = random_rational(rng);
    for (auto& row : basis)
      for (auto& x : row) x = random_rational(rng);
    if (triad::rank(basis, n) == n) return triad::RationalLattice(form, basis);
  }
}

/// Random even nondegenerate Gram matrix of rank n with |det| <= max_det.
inline triad::Matrix random_even_gram(std::mt19937_64& rng, std::size_t n, long max_det) {
  std::uniform_int_distribution<long> diag(1, 4), off(-2, 2);
  for (;;) {
    triad::Matrix g = triad::zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i][i] = 2 * diag(rng) * (off(rng) == -2 ? -1 : 1);
      for (std::size_t j = i + 1; j < n; ++j) g[i][j] = g[j][i] = off(rng);
    }
    const Rational det = triad::determinant(g);
    if (det != 0 && abs(det) <= max_det) return g;
  }
}

/// Random finite quadratic module with |D| <= max_order: q_i = m / (2 d_i)
/// (m even when d_i is odd), B_ij = k / gcd(d_i, d_j), B_ii = 2 q_i.
inline triad::QuadraticModule random_module(std::mt19937_64& rng, std::int64_t max_order) {
  std::uniform_int_distribution<std::int64_t> pick_order(2, 8);
  std::bernoulli_distribution more(0.6), zero_form(0.1);
  std::vector<std::int64_t> orders;
  std::int64_t total = 1;
  while (orders.empty() || more(rng)) {
    const std::int64_t d = pick_order(rng);
    if (total * d > max_order) break;
    orders.push_back(d);
    total *= d;
  }
  if (orders.empty()) orders.push_back(2);
  const std::size_t r = orders.size();
  const bool degenerate_zero = zero_form(rng);
  std::vector<Rational> q(r);
  triad::Matrix b = triad::zero_matrix(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const long d = static_cast<long>(orders[i]);
    std::uniform_int_distribution<long> m(0, 2 * d - 1);
    long num = degenerate_zero ? 0 : m(rng);
    if (d % 2 == 1 && num % 2 == 1) num -= 1;
    q[i] = triad::make_rational(num, 2 * d);
    b[i][i] = triad::mod_one(2 * q[i]);
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const long g = std::gcd(static_cast<long>(orders[i]), static_cast<long>(orders[j]));
      std::uniform_int_distribution<long> k(0, g - 1);
      b[i][j] = b[j][i] = degenerate_zero ? Rational(0) : triad::make_rational(k(rng), g);
    }
  return triad::build_quadratic_module(orders, q, b, Rational(static_cast<long>(r)));
}

}  // namespace oracle
