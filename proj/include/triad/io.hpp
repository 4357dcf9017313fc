#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triad/codes.hpp"
#include "triad/error.hpp"
#include "triad/lattices.hpp"
#include "triad/qseries.hpp"
#include "triad/quadratic_module.hpp"
#include "triad/sectors.hpp"

// Plain-text formats. Blank lines and text after '#' are ignored; every parse
// failure names the source and line.

namespace triad::io {

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

class Reader {
 public:
  Reader(std::string_view text, std::string source) : source_(std::move(source)) {
    std::size_t number = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream words(raw);
      Line line{number, {}};
      for (std::string w; words >> w;) line.tokens.push_back(w);
      if (!line.tokens.empty()) lines_.push_back(std::move(line));
    }
    last_line_ = number;
  }

  bool done() const noexcept { return next_ == lines_.size(); }

  const Line& peek() const {
    if (done()) fail(last_line_, "unexpected end of input");
    return lines_[next_];
  }

  const Line& next() {
    const Line& l = peek();
    ++next_;
    return l;
  }

  [[noreturn]] void fail(std::size_t line, const std::string& message) const {
    throw Error(ErrorKind::ParseError, source_ + ":" + std::to_string(line) + ": " + message);
  }

  void expect_done() const {
    if (!done()) fail(lines_[next_].number, "unexpected trailing content");
  }

  /// Runs `f`, re-throwing parse errors from token helpers with the line attached.
  template <typename F>
  auto at(const Line& line, F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ParseError) throw;
      fail(line.number, e.what());
    }
  }

  const std::string& source() const noexcept { return source_; }

 private:
  std::string source_;
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 0;
};

inline std::size_t parse_count(const std::string& token) {
  Rational r = parse_rational(token);
  if (!is_integer(r) || r < 0 || !r.get_num().fits_ulong_p())
    throw Error(ErrorKind::ParseError, "expected a nonnegative integer, got '" + token + "'");
  return r.get_num().get_ui();
}

inline std::int64_t parse_int64(const std::string& token) {
  Rational r = parse_rational(token);
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw Error(ErrorKind::ParseError, "expected an integer, got '" + token + "'");
  return r.get_num().get_si();
}

inline void expect_header(Reader& in, const Line& line, std::string_view keyword, std::size_t args) {
  if (line.tokens.front() != keyword) in.fail(line.number, "expected '" + std::string(keyword) + "' header");
  if (line.tokens.size() != args + 1)
    in.fail(line.number, "'" + std::string(keyword) + "' header takes " + std::to_string(args) + " arguments");
}

inline Vector parse_row(const Reader& in, const Line& line, std::size_t width) {
  if (line.tokens.size() != width)
    in.fail(line.number, "expected " + std::to_string(width) + " entries, found " + std::to_string(line.tokens.size()));
  Vector row;
  for (const auto& t : line.tokens) row.push_back(in.at(line, [&] { return parse_rational(t); }));
  return row;
}

inline void write_row(std::ostream& out, const Vector& row) {
  for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << to_string(row[j]);
  out << "\n";
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string sector_token(const Sector& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ":" : "") + std::to_string(s[i]);
  return s.empty() ? "0" : out;
}

inline Sector parse_sector(const std::string& token, std::size_t r) {
  Sector s;
  std::size_t start = 0;
  for (;;) {
    auto colon = token.find(':', start);
    s.push_back(parse_int64(token.substr(start, colon == std::string::npos ? std::string::npos : colon - start)));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (r == 0 && s == Sector{0}) return {};
  if (s.size() != r)
    throw Error(ErrorKind::ParseError,
                "sector '" + token + "' has " + std::to_string(s.size()) + " coordinates, expected " + std::to_string(r));
  return s;
}

}  // namespace detail

// ---- codes ----

inline BinaryCode parse_code(std::string_view text, const std::string& source = "<input>") {
  detail::Reader in(text, source);
  const auto& head = in.next();
  detail::expect_header(in, head, "code", 2);
  const std::size_t n = in.at(head, [&] { return detail::parse_count(head.tokens[1]); });
  const std::size_t k = in.at(head, [&] { return detail::parse_count(head.tokens[2]); });
  std::vector<BitWord> rows;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& line = in.next();
    if (line.tokens.size() != 1 || line.tokens[0].size() != n)
      in.fail(line.number, "expected a row of " + std::to_string(n) + " bits");
    rows.push_back(in.at(line, [&] { return BitWord::from_string(line.tokens[0]); }));
  }
  in.expect_done();
  BinaryCode code = BinaryCode::canonicalize(n, std::move(rows));
  if (code.dimension() != k) in.fail(head.number, "generator rows are linearly dependent");
  return code;
}

/// Canonical form: the reduced row-echelon generators.
inline std::string format_code(const BinaryCode& code) {
  std::ostringstream out;
  out << "code " << code.length() << " " << code.dimension() << "\n";
  for (const auto& g : code.generators()) out << g.to_string() << "\n";
  return out.str();
}

// ---- lattices ----

inline RationalLattice parse_lattice(std::string_view text, const std::string& source = "<input>") {
  detail::Reader in(text, source);
  const auto& head = in.next();
  detail::expect_header(in, head, "lattice", 2);
  const std::size_t m = in.at(head, [&] { return detail::parse_count(head.tokens[1]); });
  const std::size_t n = in.at(head, [&] { return detail::parse_count(head.tokens[2]); });
  Matrix form, basis;
  for (std::size_t i = 0; i < m; ++i) form.push_back(detail::parse_row(in, in.next(), m));
  for (std::size_t i = 0; i < n; ++i) basis.push_back(detail::parse_row(in, in.next(), m));
  in.expect_done();
  if (!is_symmetric(form)) in.fail(head.number, "ambient form is not symmetric");
  if (n > m || rank(basis, m) != n) in.fail(head.number, "basis rows are not linearly independent");
  return RationalLattice(std::move(form), std::move(basis));
}

inline std::string format_lattice(const RationalLattice& lattice) {
  std::ostringstream out;
  out << "lattice " << lattice.ambient_dimension() << " " << lattice.rank() << "\n";
  for (const auto& row : lattice.form()) detail::write_row(out, row);
  for (const auto& row : lattice.basis()) detail::write_row(out, row);
  return out.str();
}

// ---- q-series ----

inline QSeries parse_qseries(std::string_view text, const std::string& source = "<input>") {
  detail::Reader in(text, source);
  const auto& head = in.next();
  detail::expect_header(in, head, "qseries", 1);
  const std::string& spec = head.tokens[1];
  if (spec.rfind("order=", 0) != 0) in.fail(head.number, "expected order=<rational> or order=inf");
  std::optional<Rational> order;
  if (spec != "order=inf") order = in.at(head, [&] { return parse_rational(spec.substr(6)); });
  QSeries::Terms terms;
  std::optional<Rational> previous;
  while (!in.done()) {
    const auto& line = in.next();
    if (line.tokens.size() != 2) in.fail(line.number, "expected 'exponent coefficient'");
    Rational e = in.at(line, [&] { return parse_rational(line.tokens[0]); });
    Rational c = in.at(line, [&] { return parse_rational(line.tokens[1]); });
    if (!is_integer(c)) in.fail(line.number, "coefficient must be an integer");
    if (previous && e <= *previous) in.fail(line.number, "exponents must be strictly increasing");
    if (order && e > *order) in.fail(line.number, "exponent beyond the truncation order");
    previous = e;
    terms.emplace(e, c.get_num());
  }
  return order ? QSeries::truncated(std::move(terms), *order) : QSeries::exact(std::move(terms));
}

inline std::string format_qseries(const QSeries& f) {
  std::ostringstream out;
  out << "qseries order=" << (f.order() ? to_string(*f.order()) : std::string("inf")) << "\n";
  for (const auto& [e, c] : f.terms()) out << to_string(e) << " " << to_string(c) << "\n";
  return out.str();
}

// ---- finite quadratic modules with sector sets ----

/// A parsed sector file: the algebra plus the realizing lattice file, if any,
/// as written in the file.
struct SectorDocument {
  SectorAlgebra algebra;
  std::optional<std::string> realize;
};

/// `resolve` maps a `realize` argument to lattice text (e.g. by reading a file
/// relative to the document).
inline SectorDocument parse_sectors(std::string_view text, const std::string& source,
                                    const std::function<std::pair<std::string, std::string>(const std::string&)>&
                                        resolve) {
  detail::Reader in(text, source);
  const auto& head = in.next();
  detail::expect_header(in, head, "fqm", 2);
  const std::size_t r = in.at(head, [&] { return detail::parse_count(head.tokens[1]); });
  const std::string& ctok = head.tokens[2];
  if (ctok.rfind("c=", 0) != 0) in.fail(head.number, "expected c=<rational>");
  const Rational c = in.at(head, [&] { return parse_rational(ctok.substr(2)); });

  auto keyed_row = [&](std::string_view key) {
    const auto& line = in.next();
    if (line.tokens.front() != key) in.fail(line.number, "expected '" + std::string(key) + "' line");
    detail::Line rest{line.number, {line.tokens.begin() + 1, line.tokens.end()}};
    return std::make_pair(line, detail::parse_row(in, rest, r));
  };
  const auto [orders_line, orders_q] = keyed_row("orders");
  std::vector<std::int64_t> orders;
  for (const auto& d : orders_q) {
    if (!is_integer(d) || d < 1 || !d.get_num().fits_slong_p()) in.fail(orders_line.number, "orders must be positive integers");
    orders.push_back(d.get_num().get_si());
  }
  const auto q = keyed_row("q").second;
  Matrix b;
  for (std::size_t i = 0; i < r; ++i) b.push_back(keyed_row("b").second);

  std::shared_ptr<const QuadraticModule> module;
  std::vector<Sector> generators;
  std::vector<SectorAlgebra::Channel> mask;
  std::optional<std::string> realize;
  const QuadraticModule declared = in.at(head, [&] { return build_quadratic_module(orders, q, b, c); });
  module = std::make_shared<const QuadraticModule>(declared);

  while (!in.done()) {
    const auto& line = in.next();
    const std::string& key = line.tokens.front();
    if (key == "sectors") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i)
        generators.push_back(in.at(line, [&] { return detail::parse_sector(line.tokens[i], r); }));
    } else if (key == "realize") {
      if (line.tokens.size() != 2) in.fail(line.number, "realize takes one lattice file");
      realize = line.tokens[1];
      auto [lattice_text, lattice_source] = in.at(line, [&] { return resolve(line.tokens[1]); });
      const RationalLattice lattice = parse_lattice(lattice_text, lattice_source);
      auto realized = std::make_shared<const QuadraticModule>(discriminant_form(lattice));
      if (!(*realized == declared))
        in.fail(line.number, "declared module differs from the discriminant form of " + line.tokens[1]);
      module = realized;
    } else if (key == "mask") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const std::string& t = line.tokens[i];
        const auto comma = t.find(',');
        if (t.size() < 5 || t.front() != '(' || t.back() != ')' || comma == std::string::npos)
          in.fail(line.number, "mask channels are written (a,b)");
        const Sector x = in.at(line, [&] { return detail::parse_sector(t.substr(1, comma - 1), r); });
        const Sector y = in.at(line, [&] { return detail::parse_sector(t.substr(comma + 1, t.size() - comma - 2), r); });
        mask.emplace_back(x, y);
      }
    } else {
      in.fail(line.number, "unknown directive '" + key + "'");
    }
  }
  return SectorDocument{SectorAlgebra(SectorSet(module, generators), mask), realize};
}

inline std::string format_sectors(const SectorAlgebra& algebra, const std::optional<std::string>& realize = {}) {
  const auto& m = algebra.sectors().module();
  std::ostringstream out;
  out << "fqm " << m.generator_count() << " c=" << to_string(m.central_charge()) << "\n";
  out << "orders";
  for (auto d : m.orders()) out << " " << d;
  out << "\nq";
  for (const auto& x : m.q_generators()) out << " " << to_string(x);
  out << "\n";
  for (const auto& row : m.b_generators()) {
    out << "b";
    for (const auto& x : row) out << " " << to_string(x);
    out << "\n";
  }
  out << "sectors";
  for (const auto& g : algebra.sectors().generators()) out << " " << detail::sector_token(g);
  out << "\n";
  if (realize) out << "realize " << *realize << "\n";
  if (!algebra.mask().empty()) {
    out << "mask";
    for (const auto& [a, b] : algebra.mask())
      if (a <= b) out << " (" << detail::sector_token(a) << "," << detail::sector_token(b) << ")";
    out << "\n";
  }
  return out.str();
}

// ---- files ----

inline BinaryCode load_code(const std::filesystem::path& path) {
  return parse_code(detail::read_file(path), path.string());
}

inline RationalLattice load_lattice(const std::filesystem::path& path) {
  return parse_lattice(detail::read_file(path), path.string());
}

inline QSeries load_qseries(const std::filesystem::path& path) {
  return parse_qseries(detail::read_file(path), path.string());
}

/// `realize` paths are relative to the sector file's directory.
inline SectorDocument load_sectors(const std::filesystem::path& path) {
  const auto dir = path.parent_path();
  return parse_sectors(detail::read_file(path), path.string(), [&](const std::string& target) {
    const auto p = std::filesystem::path(target).is_absolute() ? std::filesystem::path(target) : dir / target;
    return std::make_pair(detail::read_file(p), p.string());
  });
}

}  // namespace triad::io
