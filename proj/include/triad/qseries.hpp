#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "triad/error.hpp"
#include "triad/rational.hpp"

namespace triad {

/// Truncated formal series sum_e c_e q^e with rational exponents and integer
/// coefficients. Coefficients at exponents above the truncation order are
/// unknown. An absent order means the series is exact (a finite sum).
class QSeries {
 public:
  using Terms = std::map<Rational, Integer>;

  QSeries() = default;

  static QSeries exact(Terms terms) { return QSeries(std::move(terms), std::nullopt); }
  static QSeries truncated(Terms terms, Rational order) { return QSeries(std::move(terms), std::move(order)); }
  static QSeries one() { return exact({{Rational(0), Integer(1)}}); }
  static QSeries monomial(const Integer& coefficient, const Rational& exponent) {
    return exact({{exponent, coefficient}});
  }

  const Terms& terms() const noexcept { return terms_; }
  const std::optional<Rational>& order() const noexcept { return order_; }
  bool is_exact() const noexcept { return !order_.has_value(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Exact coefficient lookup; zero when absent.
  Integer coefficient(const Rational& exponent) const {
    if (order_ && exponent > *order_)
      throw Error(ErrorKind::ExponentBeyondTruncation,
                  "exponent " + to_string(exponent) + " beyond truncation order " + to_string(*order_));
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Smallest exponent with a nonzero coefficient.
  std::optional<Rational> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  QSeries truncate(const Rational& order) const {
    Rational o = order_ && *order_ < order ? *order_ : order;
    Terms t;
    for (const auto& [e, c] : terms_)
      if (e <= o) t.emplace(e, c);
    return truncated(std::move(t), o);
  }

  /// Multiplication by q^shift.
  QSeries shift(const Rational& by) const {
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace(e + by, c);
    return QSeries(std::move(t), order_ ? std::optional<Rational>(*order_ + by) : std::nullopt);
  }

  QSeries scale(const Integer& k) const {
    if (k == 0) return QSeries(Terms{}, order_);
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace(e, c * k);
    return QSeries(std::move(t), order_);
  }

  QSeries operator-() const { return scale(Integer(-1)); }

  friend QSeries operator+(const QSeries& f, const QSeries& g) {
    auto order = min_order(f.order_, g.order_);
    Terms t;
    for (const auto* s : {&f, &g})
      for (const auto& [e, c] : s->terms_)
        if (!order || e <= *order) t[e] += c;
    return QSeries(std::move(t), order);
  }

  friend QSeries operator-(const QSeries& f, const QSeries& g) { return f + (-g); }

  /// Cauchy product. Known up to min(T_f + v_g, T_g + v_f), where v is the
  /// valuation (or the truncation order of an all-zero truncated series).
  friend QSeries operator*(const QSeries& f, const QSeries& g) {
    std::optional<Rational> order;
    auto bound = [](const QSeries& a, const QSeries& b) -> std::optional<Rational> {
      if (!a.order_) return std::nullopt;
      auto vb = b.lower_bound();
      if (!vb) return std::nullopt;  // b is exactly zero
      return *a.order_ + *vb;
    };
    order = min_order(bound(f, g), bound(g, f));
    if (f.is_exact() && f.empty()) order.reset();
    if (g.is_exact() && g.empty()) order.reset();
    Terms t;
    for (const auto& [ef, cf] : f.terms_)
      for (const auto& [eg, cg] : g.terms_) {
        Rational e = ef + eg;
        if (order && e > *order) break;
        t[e] += cf * cg;
      }
    return QSeries(std::move(t), order);
  }

  friend bool operator==(const QSeries& f, const QSeries& g) {
    return f.terms_ == g.terms_ && f.order_ == g.order_;
  }

 private:
  QSeries(Terms terms, std::optional<Rational> order) : terms_(std::move(terms)), order_(std::move(order)) {
    normalize();
  }

  void normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0 || (order_ && it->first > *order_))
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  // Lower bound on the exponents of nonzero terms, counting unknown tail.
  std::optional<Rational> lower_bound() const {
    if (!terms_.empty()) return terms_.begin()->first;
    return order_;
  }

  static std::optional<Rational> min_order(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
  }

  Terms terms_;
  std::optional<Rational> order_;
};

/// Multiplicative inverse. The leading coefficient must be +-1. An exact
/// multi-term series has an infinite inverse, so `order` is then required;
/// when given, it caps the truncation order of the result.
inline QSeries invert(const QSeries& f, const std::optional<Rational>& order = std::nullopt) {
  auto v = f.valuation();
  if (!v) throw Error(ErrorKind::NonUnitLeadingCoefficient, "cannot invert the zero series");
  const Integer lead = f.terms().begin()->second;
  if (lead != 1 && lead != -1)
    throw Error(ErrorKind::NonUnitLeadingCoefficient, "leading coefficient " + to_string(lead) + " is not a unit");
  if (f.is_exact() && f.terms().size() == 1) {
    auto inv = QSeries::monomial(lead, -*v);
    return order ? inv.truncate(*order) : inv;
  }
  std::optional<Rational> target;  // absolute truncation of the result
  if (f.order()) target = *f.order() - 2 * *v;
  if (order && (!target || *order < *target)) target = order;
  if (!target) throw Error(ErrorKind::UnboundedSeries, "inverse of an exact multi-term series needs an order");

  // u = lead * q^{-v} f = 1 + h with h of positive valuation; 1/u = sum (-h)^k.
  const Rational precision = *target + *v;
  if (precision < 0) return QSeries::truncated({}, *target);
  QSeries h = f.shift(-*v).scale(lead).truncate(precision) - QSeries::one();
  QSeries neg_h = -h;
  QSeries sum = QSeries::one().truncate(precision);
  QSeries term = QSeries::one();
  for (;;) {
    term = (term * neg_h).truncate(precision);
    if (term.empty()) break;
    sum = sum + term;
  }
  return sum.shift(-*v).scale(lead).truncate(*target);
}

/// f^k; negative k inverts first (see invert for `order`).
inline QSeries pow(const QSeries& f, std::int64_t k, const std::optional<Rational>& order = std::nullopt) {
  if (k < 0) return pow(invert(f, order), -k);
  QSeries result = QSeries::one();
  QSeries base = f;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return order ? result.truncate(*order) : result;
}

/// True iff every coefficient with exponent <= order agrees. Both series must
/// be known up to that order.
inline bool equal_up_to(const QSeries& f, const QSeries& g, const Rational& order) {
  for (const auto* s : {&f, &g})
    if (s->order() && *s->order() < order)
      throw Error(ErrorKind::ExponentBeyondTruncation,
                  "comparison order " + to_string(order) + " exceeds truncation " + to_string(*s->order()));
  auto a = f.terms().begin(), b = g.terms().begin();
  for (;;) {
    bool a_done = a == f.terms().end() || a->first > order;
    bool b_done = b == g.terms().end() || b->first > order;
    if (a_done || b_done) return a_done && b_done;
    if (a->first != b->first || a->second != b->second) return false;
    ++a;
    ++b;
  }
}

/// Dedekind eta q^{1/24} prod_{n>=1} (1 - q^n) via the pentagonal number theorem,
/// truncated at `order` (inclusive).
inline QSeries eta(const Rational& order) {
  if (order < Rational(1, 24)) throw Error(ErrorKind::InvalidArgument, "eta needs order >= 1/24");
  const Rational base(1, 24);
  QSeries::Terms t;
  for (long k = 0;; ++k) {
    bool any = false;
    for (long p : {k * (3 * k - 1) / 2, k * (3 * k + 1) / 2}) {
      Rational e = base + p;
      if (e > order) continue;
      any = true;
      t[e] = (k % 2 == 0) ? 1 : -1;
    }
    if (!any) break;
  }
  return QSeries::truncated(std::move(t), order);
}

/// Number of m-colored partitions of n: the coefficient of q^n in prod (1 - q^j)^{-m}.
inline Integer colored_partitions(std::uint64_t n, std::uint64_t m) {
  if (m == 0) return n == 0 ? 1 : 0;
  std::vector<Integer> ways(n + 1, Integer(0));
  ways[0] = 1;
  for (std::uint64_t part = 1; part <= n; ++part)
    for (std::uint64_t color = 0; color < m; ++color)
      for (std::uint64_t i = part; i <= n; ++i) ways[i] += ways[i - part];
  return ways[n];
}

/// Human-readable form, e.g. `1 + 240q + 2160q^2`. Non-integer exponents are
/// written as q^(p/r).
inline std::string to_display_string(const QSeries& f) {
  if (f.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << "q";
    if (e != 1) {
      if (is_integer(e) && e > 0)
        out << "^" << e;
      else
        out << "^(" << e << ")";
    }
  }
  return out.str();
}

}  // namespace triad
