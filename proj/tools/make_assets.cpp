// Writes the bundled objects to a directory, plus Z^n for any requested n:
//   make_assets <dir> [n ...]

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "triad/assets.hpp"
#include "triad/io.hpp"

namespace {

void write(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    std::exit(1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make_assets <dir> [n ...]\n";
    return 2;
  }
  namespace fs = std::filesystem;
  using namespace triad;
  const fs::path dir = argv[1];
  fs::create_directories(dir);
  write(dir / "hamming_8_4.code", io::format_code(assets::hamming_8_4()));
  write(dir / "golay_24_12.code", io::format_code(assets::golay_24_12()));
  write(dir / "a1.gram", io::format_lattice(assets::a1()));
  write(dir / "d4.gram", io::format_lattice(assets::d4()));
  write(dir / "e8.gram", io::format_lattice(assets::e8()));
  write(dir / "leech.gram", io::format_lattice(assets::leech()));
  for (int i = 2; i < argc; ++i) {
    const long n = std::strtol(argv[i], nullptr, 10);
    if (n < 0) {
      std::cerr << "rank must be nonnegative\n";
      return 2;
    }
    write(dir / ("z" + std::to_string(n) + ".gram"), io::format_lattice(standard_lattice(static_cast<std::size_t>(n))));
  }
  return 0;
}
