#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "triad/error.hpp"

namespace triad {

using Integer = mpz_class;
using Rational = mpq_class;

/// Default limit on the number of objects any exhaustive enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_of(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

inline Integer ceil_of(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

/// Representative of r mod Z in [0, 1).
inline Rational mod_one(const Rational& r) {
  Rational out = r - Rational(floor_of(r));
  out.canonicalize();
  return out;
}

inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer out;
  mpz_fdiv_r(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return out;
}

inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses `p` or `p/q`. Throws ParseError on malformed input or zero denominator.
inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  auto strip = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  Integer n(strip(num)), d(strip(den));
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace triad
