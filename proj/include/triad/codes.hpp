#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triad/error.hpp"
#include "triad/qseries.hpp"

namespace triad {

/// A vector over the two-element field, packed 64 coordinates per word.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

  static BitWord from_string(std::string_view bits) {
    BitWord w(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1')
        w.set(i);
      else if (bits[i] != '0')
        throw Error(ErrorKind::ParseError, "bit string contains '" + std::string(1, bits[i]) + "'");
    }
    return w;
  }

  std::size_t length() const noexcept { return length_; }
  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
  }

  bool is_zero() const noexcept {
    for (auto x : words_)
      if (x) return false;
    return true;
  }

  /// Size of the common support |a AND b|.
  std::size_t overlap(const BitWord& other) const noexcept {
    std::size_t w = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) w += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return w;
  }

  /// Dot product over the two-element field.
  bool dot(const BitWord& other) const noexcept { return overlap(other) % 2 == 1; }

  BitWord& operator^=(const BitWord& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }
  friend BitWord operator^(BitWord a, const BitWord& b) noexcept { return a ^= b; }

  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend bool operator<(const BitWord& a, const BitWord& b) { return a.to_string() < b.to_string(); }

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Binary linear code held by its unique reduced row-echelon generator matrix,
/// so two codes are equal exactly when their representations are.
class BinaryCode {
 public:
  /// Span of `rows` in the length-n space; dependent rows are dropped.
  static BinaryCode canonicalize(std::size_t length, std::vector<BitWord> rows) {
    for (const auto& r : rows)
      if (r.length() != length)
        throw Error(ErrorKind::LengthMismatch,
                    "row of length " + std::to_string(r.length()) + " in a code of length " + std::to_string(length));
    BinaryCode code;
    code.length_ = length;
    std::size_t next = 0;
    for (std::size_t col = 0; col < length && next < rows.size(); ++col) {
      std::size_t p = next;
      while (p < rows.size() && !rows[p].test(col)) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[next], rows[p]);
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (i != next && rows[i].test(col)) rows[i] ^= rows[next];
      code.pivots_.push_back(col);
      ++next;
    }
    rows.resize(next);
    code.generators_ = std::move(rows);
    return code;
  }

  static BinaryCode zero(std::size_t length) { return canonicalize(length, {}); }

  static BinaryCode full(std::size_t length) {
    std::vector<BitWord> rows;
    for (std::size_t i = 0; i < length; ++i) {
      BitWord w(length);
      w.set(i);
      rows.push_back(w);
    }
    return canonicalize(length, std::move(rows));
  }

  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return generators_.size(); }
  const std::vector<BitWord>& generators() const noexcept { return generators_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }

  bool contains(const BitWord& word) const {
    if (word.length() != length_)
      throw Error(ErrorKind::LengthMismatch, "word of length " + std::to_string(word.length()) +
                                                 " tested against a code of length " + std::to_string(length_));
    BitWord rest = word;
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (rest.test(pivots_[i])) rest ^= generators_[i];
    return rest.is_zero();
  }

  friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
    return a.length_ == b.length_ && a.generators_ == b.generators_;
  }

 private:
  std::size_t length_ = 0;
  std::vector<BitWord> generators_;
  std::vector<std::size_t> pivots_;
};

/// The orthogonal complement under the dot product; dimension n - k.
inline BinaryCode dual_code(const BinaryCode& code) {
  const std::size_t n = code.length();
  const auto& gens = code.generators();
  const auto& pivots = code.pivot_columns();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  // From RREF [I | A] (up to column order): each free column f gives e_f + sum_i A_if e_{p_i}.
  std::vector<BitWord> rows;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitWord w(n);
    w.set(f);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i].test(f)) w.set(pivots[i]);
    rows.push_back(std::move(w));
  }
  return BinaryCode::canonicalize(n, std::move(rows));
}

namespace detail {

inline void check_cap(const BinaryCode& code, std::uint64_t cap) {
  if (code.dimension() >= 63 || (std::uint64_t{1} << code.dimension()) > cap)
    throw Error(ErrorKind::EnumerationCapExceeded, "2^" + std::to_string(code.dimension()) +
                                                       " codewords exceed the enumeration cap " + std::to_string(cap));
}

}  // namespace detail

/// Visits every codeword once, in Gray-code order of the message vector
/// (starting from zero).
template <typename Visitor>
void for_each_codeword(const BinaryCode& code, Visitor&& visit, std::uint64_t cap = kDefaultEnumerationCap) {
  detail::check_cap(code, cap);
  BitWord word(code.length());
  visit(std::as_const(word));
  const std::uint64_t total = std::uint64_t{1} << code.dimension();
  for (std::uint64_t step = 1; step < total; ++step) {
    word ^= code.generators()[static_cast<std::size_t>(std::countr_zero(step))];
    visit(std::as_const(word));
  }
}

inline std::vector<BitWord> enumerate_codewords(const BinaryCode& code, std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<BitWord> out;
  for_each_codeword(code, [&](const BitWord& w) { out.push_back(w); }, cap);
  return out;
}

/// Number of codewords of each weight 0..n.
inline std::vector<std::uint64_t> weight_distribution(const BinaryCode& code,
                                                      std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<std::uint64_t> counts(code.length() + 1, 0);
  for_each_codeword(code, [&](const BitWord& w) { ++counts[w.weight()]; }, cap);
  return counts;
}

/// W(q) = sum over codewords of q^weight, as an exact polynomial.
inline QSeries weight_enumerator(const BinaryCode& code, std::uint64_t cap = kDefaultEnumerationCap) {
  QSeries::Terms terms;
  auto counts = weight_distribution(code, cap);
  for (std::size_t w = 0; w < counts.size(); ++w)
    if (counts[w]) terms.emplace(Rational(static_cast<long>(w)), Integer(static_cast<unsigned long>(counts[w])));
  return QSeries::exact(std::move(terms));
}

// |a + b| = |a| + |b| - 2|a AND b|, so parity conditions reduce to generators.

inline bool is_even(const BinaryCode& code) {
  for (const auto& g : code.generators())
    if (g.weight() % 2) return false;
  return true;
}

inline bool is_doubly_even(const BinaryCode& code) {
  const auto& gens = code.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].weight() % 4) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i].overlap(gens[j]) % 2) return false;
  }
  return true;
}

/// C is contained in its dual.
inline bool is_self_orthogonal(const BinaryCode& code) {
  const auto& gens = code.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      if (gens[i].dot(gens[j])) return false;
  return true;
}

inline bool is_self_dual(const BinaryCode& code) { return 2 * code.dimension() == code.length() && is_self_orthogonal(code); }

}  // namespace triad
