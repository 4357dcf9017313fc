#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "triad/assets.hpp"
#include "triad/codes.hpp"
#include "triad/error.hpp"
#include "triad/lattices.hpp"
#include "triad/quadratic_module.hpp"
#include "triad/sectors.hpp"

namespace triad {

/// Construction A with the 1/sqrt(2) scaling: {x in Z^n : x mod 2 in C} in
/// Q^n with form I/2, so a codeword of weight w lifts to a vector of norm w/2.
inline RationalLattice construction_a(const BinaryCode& code) {
  const std::size_t n = code.length();
  IntMatrix rows;
  for (const auto& g : code.generators()) {
    IntVector r(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
      if (g.test(i)) r[i] = 1;
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVector r(n, Integer(0));
    r[i] = 2;
    rows.push_back(std::move(r));
  }
  Matrix form = identity_matrix(n);
  for (auto& row : form)
    for (auto& x : row) x /= 2;
  Matrix basis;
  for (const auto& row : hermite_basis(std::move(rows), n)) {
    Vector v;
    for (const auto& x : row) v.push_back(Rational(x));
    basis.push_back(std::move(v));
  }
  return RationalLattice(std::move(form), std::move(basis));
}

/// The lattice algebra V_L as a sector set: {0} inside the complete extension L°/L.
inline SectorSet lattice_to_sectors(const RationalLattice& lattice) {
  auto module = std::make_shared<const QuadraticModule>(discriminant_form(lattice));
  return SectorSet(std::move(module), {});
}

/// M/L as a subgroup of the module realized by L, for L <= M <= L°.
inline SectorSet intermediate_to_sectors(const std::shared_ptr<const QuadraticModule>& module,
                                         const RationalLattice& intermediate) {
  const auto& lattice = detail::require_realization(*module).lattice;
  if (intermediate.form() != lattice.form())
    throw Error(ErrorKind::InclusionViolation, "lattices live in different ambient spaces");
  if (!is_sublattice(lattice, intermediate))
    throw Error(ErrorKind::InclusionViolation, "L is not contained in M");
  std::vector<Sector> gens;
  for (const auto& row : intermediate.basis()) gens.push_back(coset_of(*module, row));  // throws unless M <= L°
  return SectorSet(module, gens);
}

inline SectorSet intermediate_to_sectors(const RationalLattice& lattice, const RationalLattice& intermediate) {
  return intermediate_to_sectors(std::make_shared<const QuadraticModule>(discriminant_form(lattice)), intermediate);
}

/// The preimage of A under L° -> L°/L.
inline RationalLattice intermediate_lattice(const SectorSet& sectors) {
  const auto& lattice = detail::require_realization(sectors.module()).lattice;
  Matrix rows = lattice.basis();
  for (const auto& a : sectors.generators())
    rows.push_back(multiply(coset_representative(sectors.module(), a), lattice.basis(), lattice.ambient_dimension()));
  return span_lattice(lattice.form(), rows);
}

inline SectorSet code_to_sectors(const BinaryCode& code) {
  if (!is_doubly_even(code))
    throw Error(ErrorKind::NotDoublyEven, "sector lift needs a doubly even code (an even Construction A lattice)");
  return lattice_to_sectors(construction_a(code));
}

/// The code as sectors relative to the zero code: L_0 = construction_a(0) is
/// A1^n, L_0°/L_0 = F_2^n, and C itself is the subgroup L_C/L_0.
inline SectorSet code_as_sectors(const BinaryCode& code) {
  return intermediate_to_sectors(construction_a(BinaryCode::zero(code.length())), construction_a(code));
}

enum class Verdict { Pass, Fail, NotApplicable };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not applicable";
  }
  return "?";
}

/// One row of the code / lattice / sector comparison.
struct RowCheck {
  RowCheck() = default;
  RowCheck(std::string n, std::array<std::string, 3> c, Verdict v = Verdict::Pass, std::string d = {})
      : name(std::move(n)), cells(std::move(c)), verdict(v), detail(std::move(d)) {}

  std::string name;
  std::array<std::string, 3> cells;  // code, lattice, sectors
  Verdict verdict = Verdict::Pass;
  std::string detail;  // witness on failure, reason when not applicable
};

struct SeriesEntry {
  std::string label;
  std::optional<QSeries> series;
  std::string note;
};

struct CorrespondenceReport {
  std::string input_tier;
  std::array<std::string, 3> descriptors;
  std::vector<RowCheck> rows;
  std::vector<SeriesEntry> series;
  std::vector<std::string> notes;

  bool all_pass() const {
    for (const auto& r : rows)
      if (r.verdict == Verdict::Fail) return false;
    return true;
  }
};

struct VerifyOptions {
  Rational order = 2;
  std::uint64_t cap = kDefaultEnumerationCap;
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string sector_string(const Sector& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

inline std::string vector_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

/// First generator of `a` missing from `b`, if any.
inline std::optional<Sector> missing_generator(const SectorSet& a, const SectorSet& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return g;
  return std::nullopt;
}

inline std::string sector_set_mismatch(const SectorSet& a, const SectorSet& b, const std::string& la,
                                       const std::string& lb) {
  if (auto g = missing_generator(a, b)) return sector_string(*g) + " in " + la + " but not in " + lb;
  if (auto g = missing_generator(b, a)) return sector_string(*g) + " in " + lb + " but not in " + la;
  return "";
}

inline std::string lattice_mismatch(const RationalLattice& a, const RationalLattice& b, const std::string& la,
                                    const std::string& lb) {
  for (const auto& row : a.basis())
    if (!contains_all(b, {row})) return vector_string(row) + " in " + la + " but not in " + lb;
  for (const auto& row : b.basis())
    if (!contains_all(a, {row})) return vector_string(row) + " in " + lb + " but not in " + la;
  return "";
}

inline std::string describe(const BinaryCode& code) {
  return "[" + std::to_string(code.length()) + "," + std::to_string(code.dimension()) + "] binary code";
}

inline std::string describe(const RationalLattice& lattice) {
  return "rank " + std::to_string(lattice.rank()) + " lattice in Q^" + std::to_string(lattice.ambient_dimension()) +
         ", det " + to_string(det_gram(lattice));
}

inline std::string describe(const SectorSet& sectors) {
  const auto& m = sectors.module();
  return "|A| = " + std::to_string(sectors.order()) + " in D of order " + std::to_string(m.group_order()) +
         ", c = " + to_string(m.central_charge());
}

// Sum over codewords of theta_1^w theta_0^{n-w}, where theta_0, theta_1 are the
// theta series of the even and odd integers scaled by the form I/2.
inline QSeries theta_from_weights(const BinaryCode& code, const Rational& order) {
  QSeries::Terms t0, t1;
  for (long k = 0; make_rational(k * k, 4) <= order; ++k) {
    auto& t = k % 2 == 0 ? t0 : t1;
    t[make_rational(k * k, 4)] += k == 0 ? 1 : 2;
  }
  const QSeries theta0 = QSeries::truncated(t0, order), theta1 = QSeries::truncated(t1, order);
  const auto counts = weight_distribution(code);
  QSeries sum = QSeries::truncated({}, order);
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (!counts[w]) continue;
    QSeries term = (pow(theta1, static_cast<std::int64_t>(w)) *
                    pow(theta0, static_cast<std::int64_t>(code.length() - w)))
                       .truncate(order);
    sum = sum + term.scale(Integer(static_cast<unsigned long>(counts[w])));
  }
  return sum;
}

inline Verdict agree(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

}  // namespace detail

/// Code input: lifts C to L_C = construction_a(C) and to the sector set
/// L_C/L_0 inside F_2^n (see code_as_sectors), then compares tiers row by row.
inline CorrespondenceReport verify_table_row(const BinaryCode& code, const VerifyOptions& options = {}) {
  using detail::yes_no;
  CorrespondenceReport rep;
  rep.input_tier = "code";
  const std::size_t n = code.length(), k = code.dimension();
  const RationalLattice lat = construction_a(code);
  const RationalLattice base = construction_a(BinaryCode::zero(n));
  const auto module = std::make_shared<const QuadraticModule>(discriminant_form(base));
  const SectorSet sec = intermediate_to_sectors(module, lat);
  rep.descriptors = {detail::describe(code), "construction_a: " + detail::describe(lat),
                     "C/L_0 over A1^" + std::to_string(n) + ": " + detail::describe(sec)};

  {
    RowCheck r{"length / rank / central charge",
               {std::to_string(n), std::to_string(lat.rank()), to_string(module->central_charge())}};
    r.verdict = detail::agree(lat.rank() == n && module->central_charge() == Rational(static_cast<long>(n)));
    if (r.verdict == Verdict::Fail) r.detail = "invariants differ";
    rep.rows.push_back(r);
  }
  {
    const bool ce = is_even(code), li = has_integral_norms(lat);
    RowCheck r{"even / integral norms / -", {yes_no(ce), yes_no(li), "-"}};
    r.verdict = detail::agree(ce == li);
    if (ce != li) r.detail = "evenness of C and integrality of norms in L_C disagree";
    rep.rows.push_back(r);
  }
  {
    const bool so = is_self_orthogonal(code), li = is_integral(lat), me = is_meromorphic(sec);
    RowCheck r{"self-orthogonal / integral / meromorphic", {yes_no(so), yes_no(li), yes_no(me)}};
    r.verdict = detail::agree(so == li && li == me);
    if (r.verdict == Verdict::Fail) r.detail = "predicates disagree across tiers";
    rep.rows.push_back(r);
  }
  {
    const bool de = is_doubly_even(code), le = is_even(lat), zg = is_z_graded(sec);
    RowCheck r{"doubly even / even / z-graded", {yes_no(de), yes_no(le), yes_no(zg)}};
    r.verdict = detail::agree(de == le && le == zg);
    if (r.verdict == Verdict::Fail) r.detail = "predicates disagree across tiers";
    rep.rows.push_back(r);
  }
  {
    const BinaryCode dual = dual_code(code);
    const RationalLattice lifted_dual = construction_a(dual), dual_lift = dual_lattice(lat);
    const SectorSet dual_sec = dual_sectors(sec), sec_of_dual = intermediate_to_sectors(module, lifted_dual);
    const bool lat_ok = lifted_dual == dual_lift, sec_ok = dual_sec == sec_of_dual;
    RowCheck r{"dual / dual / dual",
               {detail::describe(dual), "L_(C°) = (L_C)°: " + yes_no(lat_ok), "(C°)/L_0 = (C/L_0)°: " + yes_no(sec_ok)}};
    r.verdict = detail::agree(lat_ok && sec_ok);
    if (!lat_ok) r.detail = detail::lattice_mismatch(lifted_dual, dual_lift, "L_(C°)", "(L_C)°");
    if (lat_ok && !sec_ok) r.detail = detail::sector_set_mismatch(sec_of_dual, dual_sec, "C°/L_0", "(C/L_0)°");
    rep.rows.push_back(r);
  }
  {
    const bool cs = is_self_dual(code), ls = is_self_dual(lat), ss = is_self_dual(sec);
    const bool mutual = ls == (lat == dual_lattice(lat));
    RowCheck r{"self-dual / self-dual / self-dual", {yes_no(cs), yes_no(ls), yes_no(ss)}};
    r.verdict = detail::agree(cs == ls && ls == ss && mutual);
    if (!mutual)
      r.detail = "integral+unimodular test and L = L° disagree";
    else if (r.verdict == Verdict::Fail)
      r.detail = "self-duality differs across tiers";
    rep.rows.push_back(r);
  }
  {
    const bool ln = is_nondegenerate(lat), sn = is_nondegenerate(sec);
    RowCheck r{"- / nondegenerate / nondegenerate", {"-", yes_no(ln), yes_no(sn)}};
    r.verdict = detail::agree(ln && sn);
    if (!ln) r.detail = "Gram determinant vanishes";
    if (ln && !sn) r.detail = "A differs from A°°";
    rep.rows.push_back(r);
  }
  {
    const bool pd = is_positive_definite(lat);
    RowCheck r{"- / positive definite / -", {"-", yes_no(pd), "-"}};
    r.verdict = detail::agree(pd);
    if (!pd) r.detail = "Construction A lattice is not positive definite";
    rep.rows.push_back(r);
  }
  {
    RowCheck r{"weights / square lengths / weights", {"wt(c)", "(x,x) = wt(c)/2", "q(a) = wt(c)/4 mod 1"}};
    for (const auto& g : code.generators()) {
      Vector x(n, Rational(0));
      for (std::size_t i = 0; i < n; ++i)
        if (g.test(i)) x[i] = 1;
      const Rational w(static_cast<long>(g.weight()));
      const Rational norm = bilinear(x, lat.form(), x);
      const Rational qa = module->quad(coset_of(*module, x));
      if (norm != w / 2 || qa != mod_one(w / 4)) {
        r.verdict = Verdict::Fail;
        r.detail = "generator " + g.to_string() + ": norm " + to_string(norm) + ", q " + to_string(qa);
        break;
      }
    }
    rep.rows.push_back(r);
  }
  {
    const SectorSet full = complete_extension(module);
    const SectorSet from_lattice = intermediate_to_sectors(module, dual_lattice(base));
    const bool ok = from_lattice == full && full.order() == (std::uint64_t{1} << n) &&
                    dual_lattice(base) == construction_a(BinaryCode::full(n));
    RowCheck r{"F_2^n / L_Q / complete extension",
               {"2^" + std::to_string(n) + " words", "L_0° = Z^n", "|D| = " + std::to_string(full.order())}};
    r.verdict = detail::agree(ok);
    if (!ok) r.detail = detail::sector_set_mismatch(from_lattice, full, "L_0°/L_0", "D");
    rep.rows.push_back(r);
  }
  {
    RowCheck r{"sector lift of L_C", {yes_no(is_doubly_even(code)), yes_no(is_even(lat)), "-"}};
    if (!is_doubly_even(code)) {
      r.verdict = Verdict::NotApplicable;
      r.detail = "C is not doubly even, so L_C is not even and has no discriminant form";
    } else {
      const SectorSet vl = code_to_sectors(code);
      const auto& m = vl.module();
      const Rational det = abs(det_gram(lat));
      const bool ok = Rational(static_cast<unsigned long>(m.group_order())) == det &&
                      m.central_charge() == Rational(static_cast<long>(n)) &&
                      dual_sectors(vl) == complete_extension(vl.module_ptr()) &&
                      (is_self_dual(code) == (m.group_order() == 1));
      r.cells[2] = "|D| = " + std::to_string(m.group_order()) + ", c = " + to_string(m.central_charge());
      r.verdict = detail::agree(ok);
      if (!ok) r.detail = "|D| = " + std::to_string(m.group_order()) + " but |det| = " + to_string(det);
    }
    rep.rows.push_back(r);
  }

  const QSeries w = weight_enumerator(code, options.cap);
  const QSeries theta = theta_series(lat, options.order);
  const QSeries chi = character(sec, options.order, options.cap);
  {
    const Rational shift(static_cast<long>(n), 24);
    const bool theta_ok = equal_up_to(theta, detail::theta_from_weights(code, options.order), options.order);
    const QSeries expected_chi =
        n == 0 ? theta : (theta * pow(eta(options.order + Rational(1, 24)), -static_cast<std::int64_t>(n)))
                             .truncate(options.order - shift);
    const bool chi_ok = chi == expected_chi;
    RowCheck r{"W / theta / character", {"W_C(1) = 2^" + std::to_string(k), "theta from W", "character = theta/eta^n"}};
    r.verdict = detail::agree(theta_ok && chi_ok);
    if (!theta_ok) r.detail = "theta of L_C differs from the weight-enumerator substitution";
    if (theta_ok && !chi_ok) r.detail = "coset character differs from theta/eta^n";
    rep.rows.push_back(r);
  }
  rep.series.push_back({"W_C", w, ""});
  rep.series.push_back({"theta(L_C)", theta, ""});
  rep.series.push_back({"character(C/L_0)", chi, ""});

  if (n == 24 && k == 12 && is_doubly_even(code)) {
    const Rational one(1);
    const QSeries lc = theta_series(lat, one), leech = theta_series(assets::leech(), one);
    rep.series.push_back({"theta(leech)", leech, "bundled Gram asset"});
    rep.notes.push_back("Golay / Leech / moonshine row is an analogy: construction_a gives an even unimodular rank 24 "
                        "lattice with " + to_string(lc.coefficient(one)) + " roots, while the Leech lattice has " +
                        to_string(leech.coefficient(one)) + "; Construction A does not produce the Leech lattice");
  }
  return rep;
}

/// Lattice input: lifts an even nondegenerate L to V_L = {0} over L°/L.
inline CorrespondenceReport verify_table_row(const RationalLattice& lattice, const VerifyOptions& options = {}) {
  using detail::yes_no;
  CorrespondenceReport rep;
  rep.input_tier = "lattice";
  const bool nondeg = is_nondegenerate(lattice), even = is_even(lattice), pd = is_positive_definite(lattice);
  std::optional<SectorSet> sec;
  std::string why_not;
  if (!nondeg)
    why_not = "L is degenerate";
  else if (!even)
    why_not = "L is not even, so it has no discriminant form";
  else
    sec = lattice_to_sectors(lattice);
  const std::string na = "n/a";
  rep.descriptors = {"-", detail::describe(lattice), sec ? "V_L: " + detail::describe(*sec) : "n/a: " + why_not};

  auto sector_row = [&](RowCheck r, auto&& evaluate) {
    if (!sec) {
      r.cells[2] = na;
      r.verdict = Verdict::NotApplicable;
      r.detail = why_not;
    } else {
      evaluate(r);
    }
    rep.rows.push_back(std::move(r));
  };

  sector_row(RowCheck{"- / rank / central charge", {"-", std::to_string(lattice.rank()), ""}}, [&](RowCheck& r) {
    const auto& c = sec->module().central_charge();
    r.cells[2] = to_string(c);
    r.verdict = detail::agree(c == Rational(static_cast<long>(lattice.rank())));
    if (r.verdict == Verdict::Fail) r.detail = "central charge differs from rank";
  });
  sector_row(RowCheck{"- / integral / meromorphic", {"-", yes_no(is_integral(lattice)), ""}}, [&](RowCheck& r) {
    const bool me = is_meromorphic(*sec);
    r.cells[2] = yes_no(me);
    r.verdict = detail::agree(me && is_integral(lattice));
    if (r.verdict == Verdict::Fail) r.detail = "V_L is not meromorphic";
  });
  sector_row(RowCheck{"- / even / z-graded", {"-", yes_no(even), ""}}, [&](RowCheck& r) {
    const bool zg = is_z_graded(*sec);
    r.cells[2] = yes_no(zg);
    r.verdict = detail::agree(zg);
    if (!zg) r.detail = "V_L has a sector of non-integral weight";
  });
  if (nondeg) {
    const RationalLattice dual = dual_lattice(lattice);
    const bool involution = dual_lattice(dual) == lattice;
    const bool det_ok = det_gram(dual) * det_gram(lattice) == 1;
    RowCheck r{"- / dual / dual", {"-", "L°° = L: " + yes_no(involution), ""}};
    r.verdict = detail::agree(involution && det_ok);
    if (!involution) r.detail = detail::lattice_mismatch(dual_lattice(dual), lattice, "L°°", "L");
    if (involution && !det_ok) r.detail = "det(G°) det(G) = " + to_string(det_gram(dual) * det_gram(lattice));
    if (sec) {
      const SectorSet lhs = intermediate_to_sectors(sec->module_ptr(), dual), rhs = dual_sectors(*sec);
      const bool ok = lhs == rhs;
      r.cells[2] = "L°/L = {0}°: " + yes_no(ok);
      if (!ok && r.verdict == Verdict::Pass) {
        r.verdict = Verdict::Fail;
        r.detail = detail::sector_set_mismatch(lhs, rhs, "L°/L", "{0}°");
      }
    } else {
      r.cells[2] = na;
    }
    rep.rows.push_back(r);
  } else {
    rep.rows.push_back(RowCheck{"- / dual / dual", {"-", na, na}, Verdict::NotApplicable, why_not});
  }
  {
    RowCheck r{"- / self-dual / self-dual", {"-", yes_no(is_self_dual(lattice)), ""}};
    const bool mutual = !nondeg || is_self_dual(lattice) == (lattice == dual_lattice(lattice));
    if (sec) {
      const bool ss = is_self_dual(*sec);
      r.cells[2] = yes_no(ss);
      r.verdict = detail::agree(mutual && ss == is_self_dual(lattice));
    } else {
      r.cells[2] = na;
      r.verdict = detail::agree(mutual);
    }
    if (!mutual) r.detail = "integral+unimodular test and L = L° disagree";
    else if (r.verdict == Verdict::Fail) r.detail = "self-duality differs across tiers";
    rep.rows.push_back(r);
  }
  sector_row(RowCheck{"- / nondegenerate / nondegenerate", {"-", yes_no(nondeg), ""}}, [&](RowCheck& r) {
    const bool sn = is_nondegenerate(*sec);
    r.cells[2] = yes_no(sn);
    r.verdict = detail::agree(sn);
    if (!sn) r.detail = "{0} differs from {0}°°";
  });
  rep.rows.push_back(RowCheck{"- / positive definite / -", {"-", yes_no(pd), "-"}, Verdict::Pass, ""});
  sector_row(RowCheck{"- / L_Q / complete extension", {"-", "L°/L", ""}}, [&](RowCheck& r) {
    const auto& m = sec->module();
    const Rational det = abs(det_gram(lattice));
    const SectorSet full = complete_extension(sec->module_ptr());
    const bool ok = Rational(static_cast<unsigned long>(m.group_order())) == det &&
                    intermediate_to_sectors(sec->module_ptr(), dual_lattice(lattice)) == full;
    r.cells[2] = "|D| = " + std::to_string(m.group_order());
    r.verdict = detail::agree(ok);
    if (!ok) r.detail = "|D| = " + std::to_string(m.group_order()) + " but |det G| = " + to_string(det);
  });

  if (pd) {
    const QSeries theta = theta_series(lattice, options.order);
    rep.series.push_back({"theta(L)", theta, ""});
    if (sec) rep.series.push_back({"character(V_L)", character(*sec, options.order, options.cap), ""});
  } else {
    rep.series.push_back({"theta(L)", std::nullopt, "L is not positive definite"});
  }
  return rep;
}

/// Sector input: when the module is realized by a lattice L, compares A with
/// the intermediate lattice M = preimage of A in L°.
inline CorrespondenceReport verify_table_row(const SectorAlgebra& algebra, const VerifyOptions& options = {}) {
  using detail::yes_no;
  CorrespondenceReport rep;
  rep.input_tier = "sectors";
  const SectorSet& a = algebra.sectors();
  const auto& module = a.module();
  std::optional<RationalLattice> lat;
  if (module.realization()) lat = intermediate_lattice(a);
  const std::string na = "n/a", why_not = "module has no lattice realization";
  rep.descriptors = {"-", lat ? "M = preimage of A: " + detail::describe(*lat) : "n/a: " + why_not,
                     detail::describe(a)};

  auto lattice_row = [&](RowCheck r, auto&& evaluate) {
    if (!lat) {
      r.cells[1] = na;
      r.verdict = Verdict::NotApplicable;
      r.detail = why_not;
    } else {
      evaluate(r);
    }
    rep.rows.push_back(std::move(r));
  };

  lattice_row(RowCheck{"- / rank / central charge", {"-", "", to_string(module.central_charge())}}, [&](RowCheck& r) {
    r.cells[1] = std::to_string(lat->rank());
    r.verdict = detail::agree(module.central_charge() == Rational(static_cast<long>(lat->rank())));
    if (r.verdict == Verdict::Fail) r.detail = "central charge differs from rank";
  });
  const bool me = is_meromorphic(a), zg = is_z_graded(a);
  lattice_row(RowCheck{"- / integral / meromorphic", {"-", "", yes_no(me)}}, [&](RowCheck& r) {
    const bool li = is_integral(*lat);
    r.cells[1] = yes_no(li);
    r.verdict = detail::agree(li == me);
    if (li != me) r.detail = "integrality of M and meromorphy of A disagree";
  });
  lattice_row(RowCheck{"- / even / z-graded", {"-", "", yes_no(zg)}}, [&](RowCheck& r) {
    const bool le = is_even(*lat);
    r.cells[1] = yes_no(le);
    r.verdict = detail::agree(le == zg);
    if (le != zg) r.detail = "evenness of M and integrality of weights on A disagree";
  });
  {
    const SectorSet d1 = dual_sectors(a), d2 = dual_sectors(d1), d3 = dual_sectors(d2);
    const bool group_ok = a.is_subset_of(d2) && d3 == d1;
    RowCheck r{"- / dual / dual", {"-", na, "A <= A°°, A°°° = A°: " + yes_no(group_ok)}};
    r.verdict = detail::agree(group_ok);
    if (!group_ok) r.detail = detail::sector_set_mismatch(d3, d1, "A°°°", "A°");
    if (lat) {
      const SectorSet lhs = intermediate_to_sectors(a.module_ptr(), dual_lattice(*lat));
      const bool ok = lhs == d1;
      r.cells[1] = "M°/L = A°: " + yes_no(ok);
      if (!ok && r.verdict == Verdict::Pass) {
        r.verdict = Verdict::Fail;
        r.detail = detail::sector_set_mismatch(lhs, d1, "M°/L", "A°");
      }
    }
    rep.rows.push_back(r);
  }
  {
    const bool ss = is_self_dual(a);
    RowCheck r{"- / self-dual / self-dual", {"-", na, yes_no(ss)}};
    if (lat) {
      const bool ls = is_self_dual(*lat);
      r.cells[1] = yes_no(ls);
      r.verdict = detail::agree(ls == ss);
      if (ls != ss) r.detail = "self-duality of M and A disagree";
    }
    rep.rows.push_back(r);
  }
  {
    RowCheck r{"- / - / nondegenerate", {"-", "-", ""}};
    const SectorSet dd = dual_sectors(dual_sectors(a));
    if (!algebra.mask().empty()) {
      const auto& [x, y] = *algebra.mask().begin();
      r.cells[2] = "degenerate: channel " + detail::sector_string(x) + " x " + detail::sector_string(y) + " masked";
    } else if (!(dd == a)) {
      r.cells[2] = "degenerate: " + detail::sector_set_mismatch(dd, a, "A°°", "A");
    } else {
      r.cells[2] = "nondegenerate: A = (A°)°";
    }
    rep.rows.push_back(r);
  }
  lattice_row(RowCheck{"- / positive definite / -", {"-", "", "-"}}, [&](RowCheck& r) {
    r.cells[1] = yes_no(is_positive_definite(*lat));
  });
  lattice_row(RowCheck{"- / L_Q / complete extension", {"-", "L°", "|D| = " + std::to_string(module.group_order())}},
              [&](RowCheck& r) {
                const auto& base = module.realization()->lattice;
                const SectorSet lhs = intermediate_to_sectors(a.module_ptr(), dual_lattice(base));
                const bool ok = lhs == complete_extension(a.module_ptr());
                r.verdict = detail::agree(ok);
                if (!ok) r.detail = detail::sector_set_mismatch(lhs, complete_extension(a.module_ptr()), "L°/L", "D");
              });
  {
    RowCheck r{"- / square lengths / weights", {"-", "(x,x)/2 mod 1", "q(a)"}};
    if (!lat) {
      r.cells[1] = na;
      r.verdict = Verdict::NotApplicable;
      r.detail = why_not;
    } else {
      const auto& base = module.realization()->lattice;
      const Matrix g = gram(base);
      for (const auto& s : a.generators()) {
        const Vector x = coset_representative(module, s);
        const Rational half_norm = mod_one(bilinear(x, g, x) / 2);
        if (half_norm != module.quad(s)) {
          r.verdict = Verdict::Fail;
          r.detail = "sector " + detail::sector_string(s) + ": q = " + to_string(module.quad(s)) +
                     ", (x,x)/2 = " + to_string(half_norm);
          break;
        }
      }
    }
    rep.rows.push_back(r);
  }

  if (lat && is_positive_definite(module.realization()->lattice)) {
    rep.series.push_back({"theta(M)", theta_series(*lat, options.order), ""});
    rep.series.push_back({"character(A)", character(a, options.order, options.cap), ""});
  } else {
    rep.series.push_back({"character(A)", std::nullopt, lat ? "lattice is not positive definite" : why_not});
  }
  return rep;
}

using TableInput = std::variant<BinaryCode, RationalLattice, SectorAlgebra>;

inline CorrespondenceReport verify_table_row(const TableInput& input, const VerifyOptions& options = {}) {
  return std::visit([&](const auto& x) { return verify_table_row(x, options); }, input);
}

}  // namespace triad
