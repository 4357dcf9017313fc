#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "triad/codes.hpp"
#include "triad/error.hpp"
#include "triad/io.hpp"
#include "triad/lattices.hpp"
#include "triad/lifts.hpp"
#include "triad/quadratic_module.hpp"
#include "triad/sectors.hpp"

namespace triad::cli {

inline constexpr std::string_view kGrammar =
    "usage:\n"
    "  triad code dual|wenum|check <file>\n"
    "  triad lattice dual|theta|disc|shortvec|check <file> [--order R] [--bound R]\n"
    "  triad sectors dual|character|check <file> [--order R]\n"
    "  triad lift a|disc|compose <file>\n"
    "  triad verify row <file> [--order R]\n"
    "options:\n"
    "  --format text|kv   output style (default text)\n"
    "  --cap N            enumeration cap (default 16777216)\n"
    "  --order R          truncation order (default 10; verify defaults to 2)\n"
    "  --bound R          short-vector norm bound (default 2)\n";

enum class Format { Text, Kv };

struct Command {
  std::string tier;
  std::string action;
  std::filesystem::path input;
  std::optional<Rational> order;
  Rational bound = 2;
  std::uint64_t cap = kDefaultEnumerationCap;
  Format format = Format::Text;
};

/// Raised for grammar violations (exit status 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const std::map<std::string, std::vector<std::string>>& actions() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"code", {"dual", "wenum", "check"}},
      {"lattice", {"dual", "theta", "disc", "shortvec", "check"}},
      {"sectors", {"dual", "character", "check"}},
      {"lift", {"a", "disc", "compose"}},
      {"verify", {"row"}},
  };
  return table;
}

inline Command parse_command(const std::vector<std::string>& args) {
  CLI::App app{"triad"};
  app.set_help_flag();
  Command cmd;
  std::string file, order, bound, format = "text";
  app.add_option("tier", cmd.tier)->required();
  app.add_option("action", cmd.action)->required();
  app.add_option("file", file)->required();
  app.add_option("--order", order);
  app.add_option("--bound", bound);
  app.add_option("--cap", cmd.cap);
  app.add_option("--format", format)->check(CLI::IsMember({"text", "kv"}));
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  const auto& table = actions();
  auto it = table.find(cmd.tier);
  if (it == table.end()) throw UsageError("unknown tier '" + cmd.tier + "'");
  if (std::find(it->second.begin(), it->second.end(), cmd.action) == it->second.end())
    throw UsageError("unknown action '" + cmd.action + "' for " + cmd.tier);
  const bool series = (cmd.tier == "lattice" && cmd.action == "theta") ||
                      (cmd.tier == "sectors" && cmd.action == "character") || cmd.tier == "verify";
  if (!order.empty() && !series) throw UsageError("--order applies to series commands only");
  if (!bound.empty() && !(cmd.tier == "lattice" && cmd.action == "shortvec"))
    throw UsageError("--bound applies to 'lattice shortvec' only");
  try {
    if (!order.empty()) cmd.order = parse_rational(order);
    if (!bound.empty()) cmd.bound = parse_rational(bound);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (cmd.bound < 0) throw UsageError("--bound must be nonnegative");
  if (cmd.cap == 0) throw UsageError("--cap must be positive");
  cmd.format = format == "kv" ? Format::Kv : Format::Text;
  cmd.input = file;
  return cmd;
}

/// Ordered key/value output: `key: value` as text, `key=value` as kv.
class Fields {
 public:
  void add(std::string key, std::string value) { items_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }

  void print(std::ostream& out, Format format) const {
    for (const auto& [k, v] : items_) out << k << (format == Format::Kv ? "=" : ": ") << v << "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

inline std::string join(const std::vector<std::string>& parts, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? std::string(sep) : "") + parts[i];
  return out;
}

inline void print_series(std::ostream& out, Format format, const std::string& key, const QSeries& f) {
  if (format == Format::Text) {
    out << to_display_string(f) << "\n";
    return;
  }
  out << key << ".order=" << (f.order() ? to_string(*f.order()) : std::string("inf")) << "\n";
  for (const auto& [e, c] : f.terms()) out << key << ".coeff[" << to_string(e) << "]=" << to_string(c) << "\n";
}

inline std::string row_string(const Vector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return join(parts);
}

inline void print_lattice(std::ostream& out, Format format, const RationalLattice& lattice) {
  if (format == Format::Text) {
    out << io::format_lattice(lattice);
    return;
  }
  Fields f;
  f.add("ambient_dimension", std::to_string(lattice.ambient_dimension()));
  f.add("rank", std::to_string(lattice.rank()));
  for (std::size_t i = 0; i < lattice.form().size(); ++i) f.add("form[" + std::to_string(i) + "]", row_string(lattice.form()[i]));
  for (std::size_t i = 0; i < lattice.rank(); ++i) f.add("basis[" + std::to_string(i) + "]", row_string(lattice.basis()[i]));
  f.print(out, format);
}

inline void print_module(std::ostream& out, Format format, const SectorAlgebra& algebra,
                         const std::optional<std::string>& realize) {
  if (format == Format::Text) {
    out << io::format_sectors(algebra, realize);
    return;
  }
  const auto& m = algebra.sectors().module();
  Fields f;
  std::vector<std::string> orders, q, gens;
  for (auto d : m.orders()) orders.push_back(std::to_string(d));
  for (const auto& x : m.q_generators()) q.push_back(to_string(x));
  for (const auto& g : algebra.sectors().generators()) gens.push_back(io::detail::sector_token(g));
  f.add("group_order", std::to_string(m.group_order()));
  f.add("central_charge", to_string(m.central_charge()));
  f.add("orders", join(orders));
  f.add("q", join(q));
  for (std::size_t i = 0; i < m.generator_count(); ++i) f.add("b[" + std::to_string(i) + "]", row_string(m.b_generators()[i]));
  f.add("sectors", join(gens));
  f.add("sector_order", std::to_string(algebra.sectors().order()));
  if (realize) f.add("realize", *realize);
  f.print(out, format);
}

inline std::string header_keyword(const std::filesystem::path& path) {
  std::istringstream in(io::detail::read_file(path));
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    if (words >> w) return w;
  }
  throw Error(ErrorKind::ParseError, path.string() + ": empty file");
}

inline void print_report(std::ostream& out, Format format, const CorrespondenceReport& rep) {
  static const std::array<std::string, 3> tiers{"code", "lattice", "sectors"};
  if (format == Format::Kv) {
    out << "input=" << rep.input_tier << "\n";
    for (std::size_t t = 0; t < 3; ++t) out << "descriptor." << tiers[t] << "=" << rep.descriptors[t] << "\n";
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
      const auto& r = rep.rows[i];
      const std::string key = "row[" + std::to_string(i) + "]";
      out << key << ".name=" << r.name << "\n";
      for (std::size_t t = 0; t < 3; ++t) out << key << "." << tiers[t] << "=" << r.cells[t] << "\n";
      out << key << ".verdict=" << verdict_name(r.verdict) << "\n";
      if (!r.detail.empty()) out << key << ".detail=" << r.detail << "\n";
    }
    for (const auto& s : rep.series) {
      if (s.series)
        print_series(out, format, "series." + s.label, *s.series);
      else
        out << "series." << s.label << ".note=" << s.note << "\n";
    }
    for (std::size_t i = 0; i < rep.notes.size(); ++i) out << "note[" << i << "]=" << rep.notes[i] << "\n";
    out << "all_pass=" << (rep.all_pass() ? "true" : "false") << "\n";
    return;
  }
  out << "input tier: " << rep.input_tier << "\n";
  for (std::size_t t = 0; t < 3; ++t) out << "  " << tiers[t] << ": " << rep.descriptors[t] << "\n";
  out << "rows (code | lattice | sectors):\n";
  for (const auto& r : rep.rows) {
    out << "  [" << verdict_name(r.verdict) << "] " << r.name << ": " << r.cells[0] << " | " << r.cells[1] << " | "
        << r.cells[2] << "\n";
    if (!r.detail.empty()) out << "      " << r.detail << "\n";
  }
  out << "series:\n";
  for (const auto& s : rep.series) {
    out << "  " << s.label << " = " << (s.series ? to_display_string(*s.series) : "n/a");
    if (!s.note.empty()) out << "  (" << s.note << ")";
    out << "\n";
  }
  for (const auto& n : rep.notes) out << "note: " << n << "\n";
  out << "result: " << (rep.all_pass() ? "all rows pass" : "some rows fail") << "\n";
}

inline void code_command(const Command& cmd, std::ostream& out) {
  const BinaryCode code = io::load_code(cmd.input);
  if (cmd.action == "dual") {
    const BinaryCode dual = dual_code(code);
    if (cmd.format == Format::Text) {
      out << io::format_code(dual);
    } else {
      Fields f;
      f.add("length", std::to_string(dual.length()));
      f.add("dimension", std::to_string(dual.dimension()));
      for (std::size_t i = 0; i < dual.dimension(); ++i) f.add("row[" + std::to_string(i) + "]", dual.generators()[i].to_string());
      f.print(out, cmd.format);
    }
  } else if (cmd.action == "wenum") {
    print_series(out, cmd.format, "wenum", weight_enumerator(code, cmd.cap));
  } else {
    Fields f;
    f.add("length", std::to_string(code.length()));
    f.add("dimension", std::to_string(code.dimension()));
    f.add("even", is_even(code));
    f.add("doubly_even", is_doubly_even(code));
    f.add("self_orthogonal", is_self_orthogonal(code));
    f.add("self_dual", is_self_dual(code));
    f.print(out, cmd.format);
  }
}

inline void lattice_command(const Command& cmd, std::ostream& out) {
  const RationalLattice lattice = io::load_lattice(cmd.input);
  const Rational order = cmd.order.value_or(Rational(10));
  if (cmd.action == "dual") {
    print_lattice(out, cmd.format, dual_lattice(lattice));
  } else if (cmd.action == "theta") {
    print_series(out, cmd.format, "theta", theta_series(lattice, order));
  } else if (cmd.action == "disc") {
    const QuadraticModule m = discriminant_form(lattice);
    Fields f;
    std::vector<std::string> orders, q;
    for (auto d : m.orders()) orders.push_back(std::to_string(d));
    for (const auto& x : m.q_generators()) q.push_back(to_string(x));
    f.add("group_order", std::to_string(m.group_order()));
    f.add("orders", orders.empty() ? std::string("-") : join(orders));
    f.add("q", q.empty() ? std::string("-") : join(q));
    for (std::size_t i = 0; i < m.generator_count(); ++i) f.add("b[" + std::to_string(i) + "]", row_string(m.b_generators()[i]));
    f.add("central_charge", to_string(m.central_charge()));
    f.print(out, cmd.format);
  } else if (cmd.action == "shortvec") {
    const auto report = short_vectors(lattice, cmd.bound);
    Fields f;
    f.add("bound", to_string(report.bound));
    f.add("count", std::to_string(report.entries.size()));
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
      std::vector<std::string> coords;
      for (auto c : report.entries[i].coordinates) coords.push_back(std::to_string(c));
      f.add("vector[" + std::to_string(i) + "]", to_string(report.entries[i].norm) + " : " + join(coords));
    }
    f.print(out, cmd.format);
  } else {
    Fields f;
    const bool nondeg = is_nondegenerate(lattice);
    f.add("ambient_dimension", std::to_string(lattice.ambient_dimension()));
    f.add("rank", std::to_string(lattice.rank()));
    f.add("det", to_string(det_gram(lattice)));
    f.add("nondegenerate", nondeg);
    f.add("integral", is_integral(lattice));
    f.add("even", is_even(lattice));
    f.add("positive_definite", is_positive_definite(lattice));
    f.add("unimodular", is_unimodular(lattice));
    f.add("self_dual", is_self_dual(lattice));
    f.print(out, cmd.format);
  }
}

inline void sectors_command(const Command& cmd, std::ostream& out) {
  const io::SectorDocument doc = io::load_sectors(cmd.input);
  const SectorSet& a = doc.algebra.sectors();
  if (cmd.action == "dual") {
    print_module(out, cmd.format, SectorAlgebra(dual_sectors(a)), doc.realize);
  } else if (cmd.action == "character") {
    print_series(out, cmd.format, "character", character(a, cmd.order.value_or(Rational(10)), cmd.cap));
  } else {
    Fields f;
    f.add("group_order", std::to_string(a.module().group_order()));
    f.add("order", std::to_string(a.order()));
    f.add("central_charge", to_string(a.module().central_charge()));
    f.add("meromorphic", is_meromorphic(a));
    f.add("z_graded", is_z_graded(a));
    f.add("self_dual", is_self_dual(a));
    f.add("nondegenerate", is_nondegenerate(a));
    f.add("degenerate", is_degenerate(doc.algebra));
    f.add("dual_order", std::to_string(dual_sectors(a).order()));
    f.print(out, cmd.format);
  }
}

inline void lift_command(const Command& cmd, std::ostream& out) {
  if (cmd.action == "a") {
    print_lattice(out, cmd.format, construction_a(io::load_code(cmd.input)));
  } else if (cmd.action == "disc") {
    const SectorSet s = lattice_to_sectors(io::load_lattice(cmd.input));
    // realize paths resolve against the sector file, so record an absolute one
    print_module(out, cmd.format, SectorAlgebra(s), std::filesystem::absolute(cmd.input).lexically_normal().string());
  } else {
    const SectorSet s = code_to_sectors(io::load_code(cmd.input));
    print_module(out, cmd.format, SectorAlgebra(s), std::nullopt);
  }
}

inline void verify_command(const Command& cmd, std::ostream& out) {
  VerifyOptions options;
  if (cmd.order) options.order = *cmd.order;
  options.cap = cmd.cap;
  const std::string kind = header_keyword(cmd.input);
  CorrespondenceReport rep;
  if (kind == "code")
    rep = verify_table_row(io::load_code(cmd.input), options);
  else if (kind == "lattice")
    rep = verify_table_row(io::load_lattice(cmd.input), options);
  else if (kind == "fqm")
    rep = verify_table_row(io::load_sectors(cmd.input).algebra, options);
  else
    throw Error(ErrorKind::ParseError, cmd.input.string() + ": unknown object type '" + kind + "'");
  print_report(out, cmd.format, rep);
}

}  // namespace detail

/// Runs one command. Output is buffered and written once; returns 0 on
/// success, 1 on a domain error, 2 on a usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = detail::parse_command(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << kGrammar;
    return 2;
  }
  std::ostringstream buffer;
  try {
    if (cmd.tier == "code")
      detail::code_command(cmd, buffer);
    else if (cmd.tier == "lattice")
      detail::lattice_command(cmd, buffer);
    else if (cmd.tier == "sectors")
      detail::sectors_command(cmd, buffer);
    else if (cmd.tier == "lift")
      detail::lift_command(cmd, buffer);
    else
      detail::verify_command(cmd, buffer);
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }
  out << buffer.str() << std::flush;
  return 0;
}

}  // namespace triad::cli
