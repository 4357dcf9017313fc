#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "oracles.hpp"
#include "triad/triad.hpp"

using namespace triad;

namespace {

Rational r(long p, long q = 1) { return make_rational(p, q); }

std::shared_ptr<const QuadraticModule> share(QuadraticModule m) {
  return std::make_shared<const QuadraticModule>(std::move(m));
}

// Z/4 with q(k) = k^2/8, the discriminant form of Gram [[4]].
std::shared_ptr<const QuadraticModule> z4() { return share(build_quadratic_module({4}, {r(1, 8)}, {{r(1, 4)}}, r(1))); }

}  // namespace

TEST(Module, Validation) {
  auto expect_ill = [](auto&& f) {
    try {
      f();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::IllFormedQuadraticForm);
    }
  };
  expect_ill([] { build_quadratic_module({3}, {r(1, 6)}, {{r(1, 3)}}, r(0)); });  // d^2 q = 3/2
  expect_ill([] { build_quadratic_module({2}, {r(1, 4)}, {{r(0)}}, r(0)); });     // B(g,g) != 2q
  expect_ill([] { build_quadratic_module({2, 2}, {r(0), r(0)}, {{r(0), r(1, 4)}, {r(1, 4), r(0)}}, r(0)); });
  EXPECT_NO_THROW(build_quadratic_module({2}, {r(1, 4)}, {{r(1, 2)}}, r(1)));
}

TEST(Module, ValuesAndGroupLaw) {
  auto m = z4();
  EXPECT_EQ(m->group_order(), 4u);
  EXPECT_EQ(m->quad({1}), r(1, 8));
  EXPECT_EQ(m->quad({2}), r(1, 2));
  EXPECT_EQ(m->quad({3}), r(1, 8));
  EXPECT_EQ(m->bilinear({1}, {2}), r(1, 2));
  EXPECT_EQ(m->add({3}, {2}), Sector{1});
  EXPECT_EQ(m->negate({1}), Sector{3});
  EXPECT_THROW(m->reduce({1, 1}), Error);
}

TEST(Module, QuadraticRefinesBilinear) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = oracle::random_module(rng, 64);
    const auto all = oracle::elements(m);
    for (int k = 0; k < 50; ++k) {
      const auto& a = all[rng() % all.size()];
      const auto& b = all[rng() % all.size()];
      EXPECT_EQ(m.quad(m.add(a, b)), mod_one(m.quad(a) + m.quad(b) + m.bilinear(a, b)));
      EXPECT_EQ(m.bilinear(a, b), m.bilinear(b, a));
      EXPECT_EQ(m.quad(m.negate(a)), m.quad(a));
    }
  }
}

TEST(Discriminant, SmallLattices) {
  auto a1 = discriminant_form(assets::a1());
  EXPECT_EQ(a1.orders(), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(a1.q_generators()[0], r(1, 4));
  EXPECT_EQ(a1.central_charge(), 1);

  auto d4 = discriminant_form(assets::d4());
  EXPECT_EQ(d4.group_order(), 4u);
  d4.for_each_element(
      [&](const Sector& x) {
        if (x != d4.zero()) {
          EXPECT_EQ(d4.quad(x), r(1, 2));
        }
      },
      16);

  auto four = discriminant_form(lattice_from_gram({{r(4)}}));
  EXPECT_EQ(four.orders(), (std::vector<std::int64_t>{4}));
  EXPECT_EQ(four.quad({1}), r(1, 8));

  EXPECT_EQ(discriminant_form(assets::e8()).group_order(), 1u);
  EXPECT_THROW(discriminant_form(standard_lattice(2)), Error);
}

TEST(Discriminant, CensusMatchesCosetOracle) {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix g = oracle::random_even_gram(rng, 1 + rng() % 4, 64);
    auto m = discriminant_form(lattice_from_gram(g));
    auto census = oracle::coset_census(g);
    EXPECT_EQ(m.group_order(), census.order);
    EXPECT_EQ(Rational(static_cast<unsigned long>(m.group_order())), abs(determinant(g)));
    std::map<Rational, std::size_t> values;
    m.for_each_element([&](const Sector& x) { values[m.quad(x)] += 1; }, 1 << 12);
    EXPECT_EQ(values, census.q_values);
  }
}

TEST(Discriminant, CosetMapRoundTrip) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix g = oracle::random_even_gram(rng, 1 + rng() % 3, 32);
    const auto lat = lattice_from_gram(g);
    auto m = share(discriminant_form(lat));
    m->for_each_element(
        [&](const Sector& x) {
          const Vector rep = coset_representative(*m, x);
          EXPECT_EQ(coset_of(*m, multiply(rep, lat.basis(), lat.ambient_dimension())), x);
          EXPECT_EQ(mod_one(bilinear(rep, g, rep) / 2), m->quad(x));
        },
        1 << 12);
  }
}

TEST(SectorSet, CanonicalAndMembership) {
  auto m = share(build_quadratic_module({2, 4}, {r(0), r(0)}, {{r(0), r(0)}, {r(0), r(0)}}, r(0)));
  SectorSet a(m, {{1, 2}}), b(m, {{1, 2}, {0, 0}, {1, 2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.order(), 2u);
  EXPECT_TRUE(a.contains({1, 2}));
  EXPECT_FALSE(a.contains({0, 2}));
  SectorSet c(m, {{1, 1}});
  EXPECT_EQ(c.order(), 4u);
  EXPECT_EQ(c.elements(), (std::vector<Sector>{{0, 0}, {0, 2}, {1, 1}, {1, 3}}));
}

TEST(SectorSet, HermiteMatchesExplicitClosure) {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = share(oracle::random_module(rng, 64));
    const auto all = oracle::elements(*m);
    std::set<Sector> gens;
    for (std::size_t k = rng() % 3; k > 0; --k) gens.insert(all[rng() % all.size()]);
    SectorSet s(m, {gens.begin(), gens.end()});
    EXPECT_EQ(oracle::as_set(s), oracle::closure(*m, gens));
  }
}

TEST(Duals, ZeroAndFull) {
  auto m = share(discriminant_form(assets::a1()));
  SectorSet zero = subgroup_span(m, {});
  EXPECT_EQ(dual_sectors(zero), complete_extension(m));
  EXPECT_EQ(dual_sectors(complete_extension(m)), zero);
}

TEST(Duals, AgreeWithFilterOracle) {
  std::mt19937_64 rng(60);
  for (int trial = 0; trial < 25; ++trial) {
    auto m = share(oracle::random_module(rng, 48));
    for (const auto& a : enumerate_subgroups(m)) {
      const auto d = dual_sectors(a);
      EXPECT_EQ(oracle::as_set(d), oracle::dual_by_filter(*m, oracle::as_set(a)));
    }
  }
}

TEST(Duals, SubgroupEnumerationIsComplete) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    auto m = share(oracle::random_module(rng, 32));
    std::set<std::set<Sector>> mine;
    for (const auto& s : enumerate_subgroups(m)) mine.insert(oracle::as_set(s));
    EXPECT_EQ(mine, oracle::subgroups(*m));
  }
}

TEST(Predicates, Z4Example) {
  auto m = z4();
  SectorSet a(m, {{2}});
  EXPECT_TRUE(is_meromorphic(a));
  EXPECT_FALSE(is_z_graded(a));
  EXPECT_TRUE(is_self_dual(a));
  EXPECT_TRUE(is_nondegenerate(a));
  EXPECT_FALSE(is_degenerate(SectorAlgebra(a)));
  EXPECT_TRUE(is_degenerate(SectorAlgebra(a, {{{2}, {2}}})));
  EXPECT_THROW(SectorAlgebra(a, {{{1}, {2}}}), Error);
}

TEST(Predicates, DegenerateFormHasNondegenerateFailures) {
  // B identically zero on Z/2 x Z/2: every A has A° = D, so only D is nondegenerate
  auto m = share(build_quadratic_module({2, 2}, {r(0), r(0)}, {{r(0), r(0)}, {r(0), r(0)}}, r(0)));
  for (const auto& a : enumerate_subgroups(m)) {
    EXPECT_EQ(dual_sectors(a), complete_extension(m));
    EXPECT_EQ(is_nondegenerate(a), a == complete_extension(m));
    EXPECT_TRUE(is_meromorphic(a));
  }
}

TEST(Predicates, AgreeWithElementwiseCheck) {
  std::mt19937_64 rng(70);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = share(oracle::random_module(rng, 32));
    for (const auto& a : enumerate_subgroups(m)) {
      bool mero = true, graded = true;
      for (const auto& x : a.elements()) {
        graded = graded && m->quad(x) == 0;
        for (const auto& y : a.elements()) mero = mero && m->bilinear(x, y) == 0;
      }
      EXPECT_EQ(is_meromorphic(a), mero);
      EXPECT_EQ(is_z_graded(a), graded);
    }
  }
}

TEST(Characters, Heisenberg) {
  for (std::uint64_t m = 1; m <= 3; ++m) {
    auto chi = heisenberg_character(m, r(20));
    const Rational shift(static_cast<long>(m), 24);
    auto expected = oracle::colored(20, m);
    for (long n = 0; n <= 20; ++n) EXPECT_EQ(chi.coefficient(r(n) - shift), expected[n]);
  }
  EXPECT_THROW(heisenberg_character(0, r(3)), Error);
}

TEST(Characters, E8MatchesConvolution) {
  auto m = share(discriminant_form(assets::e8()));
  auto chi = character(subgroup_span(m, {}), r(3));
  auto theta = oracle::e8_counts(3);
  auto p8 = oracle::colored(3, 8);
  for (long n = 0; n <= 3; ++n) {
    Integer expected = 0;
    for (long k = 0; k <= n; ++k) expected += Integer(static_cast<unsigned long>(theta[k])) * p8[n - k];
    EXPECT_EQ(chi.coefficient(r(n) - r(1, 3)), expected);
  }
  EXPECT_EQ(to_display_string(character(subgroup_span(m, {}), r(2))), "q^(-1/3) + 248q^(2/3) + 4124q^(5/3)");
}

TEST(Characters, A1IncludesBothCosetsWhenFull) {
  auto m = share(discriminant_form(assets::a1()));
  // V_A1: theta_A1 / eta = q^{-1/24}(1 + 3q + 4q^2 + 7q^3 + ...)
  auto chi0 = character(subgroup_span(m, {}), r(3));
  EXPECT_EQ(to_display_string(chi0), "q^(-1/24) + 3q^(23/24) + 4q^(47/24) + 7q^(71/24)");
  auto full = character(complete_extension(m), r(3));
  // the odd coset adds 2q^{1/4} (1 + ...) / eta
  EXPECT_EQ(full.coefficient(r(1, 4) - r(1, 24)), 2);
}

TEST(Characters, NeedsRealization) {
  auto m = z4();
  try {
    character(subgroup_span(m, {}), r(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoLatticeRealization);
  }
}
