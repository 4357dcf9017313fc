#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "oracles.hpp"
#include "triad/triad.hpp"

using namespace triad;

namespace {

Rational r(long p, long q = 1) { return make_rational(p, q); }

BinaryCode code_of(std::size_t n, std::initializer_list<const char*> rows) {
  std::vector<BitWord> words;
  for (auto w : rows) words.push_back(BitWord::from_string(w));
  return BinaryCode::canonicalize(n, words);
}

const RowCheck& row(const CorrespondenceReport& rep, std::string_view name) {
  for (const auto& r : rep.rows)
    if (r.name == name) return r;
  throw std::logic_error("missing row " + std::string(name));
}

}  // namespace

TEST(ConstructionA, OneDimensional) {
  EXPECT_EQ(gram(construction_a(BinaryCode::zero(1))), (Matrix{{r(2)}}));
  EXPECT_EQ(gram(construction_a(BinaryCode::full(1))), (Matrix{{r(1, 2)}}));
}

TEST(ConstructionA, HammingGivesE8Theta) {
  auto l = construction_a(assets::hamming_8_4());
  EXPECT_TRUE(is_even(l));
  EXPECT_TRUE(is_unimodular(l));
  EXPECT_TRUE(is_positive_definite(l));
  EXPECT_EQ(theta_series(l, r(3)), theta_series(assets::e8(), r(3)));
}

TEST(ConstructionA, DeterminantAndMembership) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    auto c = oracle::random_code(rng, n, rng() % (n + 1));
    auto l = construction_a(c);
    EXPECT_EQ(l.rank(), n);
    const long e = static_cast<long>(n) - 2 * static_cast<long>(c.dimension());
    EXPECT_EQ(det_gram(l), e >= 0 ? Rational(Integer(1) << e) : Rational(1, Integer(1) << -e));
    // x in L_C iff x mod 2 in C, checked on all 0/1 vectors
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      BitWord w(n);
      Vector x(n, Rational(0));
      for (std::size_t i = 0; i < n; ++i)
        if ((v >> i) & 1) {
          w.set(i);
          x[i] = 1;
        }
      EXPECT_EQ(contains_all(l, {x}), c.contains(w));
    }
  }
}

TEST(ConstructionA, PredicateTransport) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    auto c = oracle::random_code(rng, n, rng() % (n / 2 + 1), trial % 2 == 0);
    auto l = construction_a(c);
    EXPECT_EQ(is_even(c), has_integral_norms(l));
    EXPECT_EQ(is_self_orthogonal(c), is_integral(l));
    EXPECT_EQ(is_doubly_even(c), is_even(l));
    EXPECT_EQ(is_self_dual(c), is_self_dual(l));
  }
}

TEST(ConstructionA, EvenCodeNeedNotGiveIntegralLattice) {
  // {000, 110, 011, 101} is even but (110, 011) = 1/2
  auto c = code_of(3, {"110", "011"});
  EXPECT_TRUE(is_even(c));
  EXPECT_FALSE(is_integral(construction_a(c)));
  EXPECT_TRUE(has_integral_norms(construction_a(c)));
}

TEST(ConstructionA, DualCommutes) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    auto c = oracle::random_code(rng, n, rng() % (n + 1), trial % 2 == 0);
    EXPECT_EQ(construction_a(dual_code(c)), dual_lattice(construction_a(c)));
  }
  for (const auto& c : {assets::hamming_8_4(), assets::golay_24_12()})
    EXPECT_EQ(construction_a(dual_code(c)), dual_lattice(construction_a(c)));
}

TEST(LatticeToSectors, Examples) {
  auto e8 = lattice_to_sectors(assets::e8());
  EXPECT_EQ(e8.module().group_order(), 1u);
  EXPECT_TRUE(is_self_dual(e8));

  auto a1 = lattice_to_sectors(assets::a1());
  EXPECT_EQ(a1.module().q_generators(), (std::vector<Rational>{r(1, 4)}));
  EXPECT_EQ(a1.order(), 1u);
  EXPECT_EQ(dual_sectors(a1).order(), 2u);

  auto four = lattice_to_sectors(lattice_from_gram({{r(4)}}));
  EXPECT_EQ(four.module().quad({1}), r(1, 8));
  EXPECT_THROW(lattice_to_sectors(standard_lattice(1)), Error);
}

TEST(IntermediateToSectors, Gram4Example) {
  const auto l = lattice_from_gram({{r(4)}});
  const auto m = std::make_shared<const QuadraticModule>(discriminant_form(l));
  EXPECT_EQ(intermediate_to_sectors(m, l), subgroup_span(m, {}));
  EXPECT_EQ(intermediate_to_sectors(m, dual_lattice(l)), complete_extension(m));
  // M = Z * (2 * dual basis vector) = Z * (1/2) has Gram [[1]]
  const RationalLattice mid(l.form(), {{r(1, 2)}});
  EXPECT_EQ(gram(mid), (Matrix{{r(1)}}));
  const SectorSet a = intermediate_to_sectors(m, mid);
  EXPECT_EQ(a.elements(), (std::vector<Sector>{{0}, {2}}));
  EXPECT_TRUE(is_self_dual(a));
  EXPECT_TRUE(is_self_dual(mid));
  EXPECT_EQ(intermediate_lattice(a), mid);
}

TEST(IntermediateToSectors, InclusionViolations) {
  const auto l = lattice_from_gram({{r(4)}});
  auto expect_violation = [&](const RationalLattice& m) {
    try {
      intermediate_to_sectors(l, m);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InclusionViolation);
    }
  };
  expect_violation(RationalLattice(l.form(), {{r(1, 8)}}));  // beyond L°
  expect_violation(RationalLattice(l.form(), {{r(2)}}));     // misses L
}

TEST(IntermediateToSectors, DualCommutesForAllIntermediates) {
  std::mt19937_64 rng(8);
  int integral = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix g = oracle::random_even_gram(rng, 1 + rng() % 3, 16);
    const auto l = lattice_from_gram(g);
    const auto module = std::make_shared<const QuadraticModule>(discriminant_form(l));
    for (const auto& a : enumerate_subgroups(module)) {
      const RationalLattice mid = intermediate_lattice(a);
      EXPECT_EQ(intermediate_to_sectors(module, mid), a);
      EXPECT_EQ(intermediate_to_sectors(module, dual_lattice(mid)), dual_sectors(a));
      EXPECT_EQ(is_integral(mid), is_meromorphic(a));
      EXPECT_EQ(is_even(mid), is_z_graded(a));
      integral += is_integral(mid);
    }
  }
  EXPECT_GT(integral, 0);
}

TEST(CodeToSectors, Examples) {
  auto h = code_to_sectors(assets::hamming_8_4());
  EXPECT_EQ(h.module().group_order(), 1u);
  auto z = code_to_sectors(BinaryCode::zero(1));
  EXPECT_EQ(z.module().orders(), (std::vector<std::int64_t>{2}));
  auto g = code_to_sectors(assets::golay_24_12());
  EXPECT_EQ(g.module().group_order(), 1u);
  EXPECT_EQ(g.module().central_charge(), 24);
  try {
    code_to_sectors(code_of(2, {"11"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDoublyEven);
  }
}

TEST(CodeAsSectors, SubcodesGiveGradedSectorSets) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    auto c = oracle::random_code(rng, n, rng() % (n + 1));
    auto a = code_as_sectors(c);
    EXPECT_EQ(a.order(), std::uint64_t{1} << c.dimension());
    EXPECT_EQ(is_meromorphic(a), is_self_orthogonal(c));
    EXPECT_EQ(is_z_graded(a), is_doubly_even(c));
    EXPECT_EQ(dual_sectors(a), code_as_sectors(dual_code(c)));
  }
}

TEST(Report, HammingAllPass) {
  auto rep = verify_table_row(assets::hamming_8_4());
  EXPECT_TRUE(rep.all_pass());
  for (const auto& r : rep.rows) EXPECT_EQ(r.verdict, Verdict::Pass) << r.name;
  const auto& triple = row(rep, "doubly even / even / z-graded");
  EXPECT_EQ(triple.cells, (std::array<std::string, 3>{"true", "true", "true"}));
}

TEST(Report, EvenButNotDoublyEven) {
  auto rep = verify_table_row(code_of(2, {"11"}));
  EXPECT_TRUE(rep.all_pass());
  const auto& lift = row(rep, "sector lift of L_C");
  EXPECT_EQ(lift.verdict, Verdict::NotApplicable);
  EXPECT_FALSE(lift.detail.empty());
  const auto& de = row(rep, "doubly even / even / z-graded");
  EXPECT_EQ(de.cells[0], "false");
  EXPECT_EQ(de.cells[1], "false");
  EXPECT_EQ(row(rep, "self-orthogonal / integral / meromorphic").cells[1], "true");
}

TEST(Report, GolaySelfDualEverywhere) {
  VerifyOptions opt;
  opt.order = 1;
  auto rep = verify_table_row(assets::golay_24_12(), opt);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(row(rep, "length / rank / central charge").cells, (std::array<std::string, 3>{"24", "24", "24"}));
  EXPECT_EQ(row(rep, "self-dual / self-dual / self-dual").cells, (std::array<std::string, 3>{"true", "true", "true"}));
  ASSERT_EQ(rep.notes.size(), 1u);
  EXPECT_NE(rep.notes[0].find("48 roots"), std::string::npos);
}

TEST(Report, OddLatticeIsNotApplicableForSectors) {
  auto rep = verify_table_row(standard_lattice(2));
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(row(rep, "- / even / z-graded").verdict, Verdict::NotApplicable);
}

TEST(Report, SectorAlgebraWithMask) {
  auto m = std::make_shared<const QuadraticModule>(discriminant_form(lattice_from_gram({{r(4)}})));
  SectorAlgebra masked(SectorSet(m, {{2}}), {{{2}, {2}}});
  auto rep = verify_table_row(masked);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(row(rep, "- / - / nondegenerate").cells[2].rfind("degenerate", 0), 0u);
  auto plain = verify_table_row(SectorAlgebra(SectorSet(m, {{2}})));
  EXPECT_EQ(row(plain, "- / - / nondegenerate").cells[2].rfind("nondegenerate", 0), 0u);
  EXPECT_EQ(row(plain, "- / self-dual / self-dual").cells[1], "true");
}

TEST(Report, UnrealizedModule) {
  auto m = std::make_shared<const QuadraticModule>(build_quadratic_module({4}, {r(1, 8)}, {{r(1, 4)}}, r(1)));
  auto rep = verify_table_row(SectorAlgebra(SectorSet(m, {{2}})));
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(row(rep, "- / integral / meromorphic").verdict, Verdict::NotApplicable);
}
