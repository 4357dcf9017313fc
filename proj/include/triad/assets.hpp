#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "triad/codes.hpp"
#include "triad/lattices.hpp"

// Bundled objects. The files under data/ are the canonical serializations of these.

namespace triad::assets {

namespace detail {

template <std::size_t N>
RationalLattice from_gram(const std::array<std::array<int, N>, N>& entries) {
  Matrix g = zero_matrix(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) g[i][j] = entries[i][j];
  return lattice_from_gram(g);
}

inline BinaryCode from_rows(std::size_t length, const std::vector<std::string_view>& rows) {
  std::vector<BitWord> words;
  for (auto r : rows) words.push_back(BitWord::from_string(r));
  return BinaryCode::canonicalize(length, std::move(words));
}

}  // namespace detail

/// Extended Hamming [8,4] code.
inline BinaryCode hamming_8_4() {
  return detail::from_rows(8, {"11110000", "00111100", "00001111", "01010101"});
}

/// Extended Golay [24,12] code (cyclic Golay code plus an overall parity bit).
inline BinaryCode golay_24_12() {
  return detail::from_rows(24, {
      "100000000000101011100011",
      "010000000000111110010010",
      "001000000000110100101011",
      "000100000000110001110110",
      "000010000000110011011001",
      "000001000000011001101101",
      "000000100000001100110111",
      "000000010000101101111000",
      "000000001000010110111100",
      "000000000100001011011110",
      "000000000010101110001101",
      "000000000001010111000111",
  });
}

/// Root lattice A1, Gram [[2]].
inline RationalLattice a1() { return detail::from_gram<1>({{{2}}}); }

/// Root lattice D4 (Cartan matrix).
inline RationalLattice d4() {
  return detail::from_gram<4>({{
      {2, -1, 0, 0},
      {-1, 2, -1, -1},
      {0, -1, 2, 0},
      {0, -1, 0, 2}
  }});
}

/// Root lattice E8 (Cartan matrix).
inline RationalLattice e8() {
  return detail::from_gram<8>({{
      {2, -1, 0, 0, 0, 0, 0, 0},
      {-1, 2, -1, 0, 0, 0, 0, 0},
      {0, -1, 2, -1, 0, 0, 0, -1},
      {0, 0, -1, 2, -1, 0, 0, 0},
      {0, 0, 0, -1, 2, -1, 0, 0},
      {0, 0, 0, 0, -1, 2, -1, 0},
      {0, 0, 0, 0, 0, -1, 2, 0},
      {0, 0, -1, 0, 0, 0, 0, 2}
  }});
}

/// Leech lattice: even unimodular of rank 24 without roots (reduced Gram).
inline RationalLattice leech() {
  return detail::from_gram<24>({{
      {4, 2, 2, 2, 1, 2, 2, 2, 2, 2, 1, -1, 2, -2, 2, 2, 0, -2, -1, -1, 0, 1, -2, 0},
      {2, 4, 2, 2, 2, 2, 2, 2, 1, 0, 2, 1, 2, -2, 1, 2, 1, -2, 1, -2, 1, 2, -2, -1},
      {2, 2, 4, 2, 2, 2, 2, 2, 2, 2, 2, -1, 1, 0, 1, 1, 0, -1, 1, -1, 0, 2, 0, 0},
      {2, 2, 2, 4, 2, 1, 2, 2, 2, 1, 0, 0, 0, -1, 1, 1, -1, 0, -1, 0, -1, 0, -1, 1},
      {1, 2, 2, 2, 4, 2, 2, 2, 2, 1, 1, -1, 0, 0, 0, 0, -1, 0, 0, -1, -1, 0, 0, -1},
      {2, 2, 2, 1, 2, 4, 2, 2, 2, 2, 2, 0, 2, -1, 1, 2, 1, -2, 0, -2, 1, 2, 0, 0},
      {2, 2, 2, 2, 2, 2, 4, 2, 2, 1, 2, -1, 1, 0, 0, 1, 1, -1, -1, -2, 1, 0, -1, -1},
      {2, 2, 2, 2, 2, 2, 2, 4, 2, 1, 1, -1, 2, 0, 0, 2, 1, -1, -1, 0, -1, 1, 0, -1},
      {2, 1, 2, 2, 2, 2, 2, 2, 4, 1, 0, -2, 1, -1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1},
      {2, 0, 2, 1, 1, 2, 1, 1, 1, 4, 1, -1, 0, 0, 2, 1, -1, -1, 0, -1, -1, 1, 0, 1},
      {1, 2, 2, 0, 1, 2, 2, 1, 0, 1, 4, 0, 1, 0, 1, 2, 1, -2, 1, -2, 2, 2, -1, -1},
      {-1, 1, -1, 0, -1, 0, -1, -1, -2, -1, 0, 4, 0, -1, 0, 1, 1, 0, 1, -1, 1, 1, 0, 0},
      {2, 2, 1, 0, 0, 2, 1, 2, 1, 0, 1, 0, 4, -1, 0, 2, 2, -2, 0, -1, 1, 2, -1, -1},
      {-2, -2, 0, -1, 0, -1, 0, 0, -1, 0, 0, -1, -1, 4, -2, -1, 0, 2, 0, 1, -1, -1, 2, -1},
      {2, 1, 1, 1, 0, 1, 0, 0, 0, 2, 1, 0, 0, -2, 4, 1, -1, -2, 0, -1, 0, 1, -2, 1},
      {2, 2, 1, 1, 0, 2, 1, 2, 0, 1, 2, 1, 2, -1, 1, 4, 1, -2, 0, -1, 1, 2, -1, 0},
      {0, 1, 0, -1, -1, 1, 1, 1, 0, -1, 1, 1, 2, 0, -1, 1, 4, -1, 0, -1, 2, 1, 0, -1},
      {-2, -2, -1, 0, 0, -2, -1, -1, -1, -1, -2, 0, -2, 2, -2, -2, -1, 4, -1, 2, -2, -2, 2, 0},
      {-1, 1, 1, -1, 0, 0, -1, -1, -1, 0, 1, 1, 0, 0, 0, 0, 0, -1, 4, -1, 1, 2, 0, 0},
      {-1, -2, -1, 0, -1, -2, -2, 0, 0, -1, -2, -1, -1, 1, -1, -1, -1, 2, -1, 4, -2, -1, 1, 1},
      {0, 1, 0, -1, -1, 1, 1, -1, 0, -1, 2, 1, 1, -1, 0, 1, 2, -2, 1, -2, 4, 1, -1, 0},
      {1, 2, 2, 0, 0, 2, 0, 1, 0, 1, 2, 1, 2, -1, 1, 2, 1, -2, 2, -1, 1, 4, 0, 0},
      {-2, -2, 0, -1, 0, 0, -1, 0, 0, 0, -1, 0, -1, 2, -2, -1, 0, 2, 0, 1, -1, 0, 4, 0},
      {0, -1, 0, 1, -1, 0, -1, -1, 1, 1, -1, 0, -1, -1, 1, 0, -1, 0, 0, 1, 0, 0, 0, 4}
  }});
}

}  // namespace triad::assets
