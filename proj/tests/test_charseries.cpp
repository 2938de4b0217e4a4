#include <gtest/gtest.h>

#include <random>

#include "ghcseries/charseries.hpp"
#include "ghcseries/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ghcseries;
using namespace ghcseries::charseries;

TEST(Partition, MatchesRecursiveOracle) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> wt(1, 7), len(1, 6);
  for (int i = 0; i < 80; ++i) {
    std::vector<int> w(static_cast<std::size_t>(len(rng)));
    for (auto& x : w) x = wt(rng);
    PartitionTable table(w, 30);
    for (int x = -3; x <= 30; ++x) EXPECT_EQ(table.at(x), x < 0 ? 0 : oracle::partitions(w, x));
  }
}

TEST(Partition, KnownValues) {
  // Weights {6, 4, 2, 2}: P(0..6) = 1, 0, 2, 0, 4, 0, 7.
  std::vector<int> w = {6, 4, 2, 2};
  std::vector<std::int64_t> want = {1, 0, 2, 0, 4, 0, 7};
  for (int x = 0; x <= 6; ++x) EXPECT_EQ(partition_function(w, x), want[static_cast<std::size_t>(x)]);
}

TEST(Partition, AutoExtendAndWindow) {
  PartitionTable t({1}, 5);
  EXPECT_THROW(t.at(6), Error);
  EXPECT_EQ(t(100), 1);
  EXPECT_EQ(t.at(100), 1);
}

TEST(Partition, Overflow) {
  try {
    PartitionTable({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 4000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InternalError);
  }
}

TEST(TCharacterN, LowestWeight) {
  for (const auto& f : fixtures::all_fixtures()) {
    auto p = fixtures::load(f);
    for (std::int64_t mu = 0; mu <= 6; ++mu) {
      auto n = t_character_N(p, ModuleDatumE::from_mu(p, mu, 2), 40);
      EXPECT_EQ(n.at(static_cast<int>(mu) + 1), 0);
      EXPECT_EQ(n.at(static_cast<int>(mu) + 2), 2);
    }
  }
}

TEST(Euler, TrivialTCharacter) {
  cohomology::TruncatedTCharacter c;
  c.mults[0] = 1;
  auto k = euler_k_character(c, 20);
  EXPECT_EQ(k.at(0), 2);
  for (int d = 1; d <= 20; ++d) EXPECT_EQ(k.at(d), 0);
}

TEST(Euler, AgreesWithKoszulOracle) {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> wt(-12, 12), mult(0, 3), count(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    cohomology::TruncatedTCharacter n;
    int terms = count(rng);
    for (int i = 0; i < terms; ++i) n.mults[wt(rng)] += mult(rng);
    auto k = euler_k_character(n, 16);
    for (int d = 0; d <= 16; ++d) EXPECT_EQ(k.at(d), oracle::koszul_euler(n.mults, d)) << "trial " << trial;
  }
}

TEST(Euler, WindowTooNarrow) {
  cohomology::TruncatedTCharacter n;
  n.hi = 10;
  try {
    euler_k_character(n, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WindowTooNarrow);
  }
}

TEST(F1, EulerOfNIsMinusF1) {
  // For mu >= 0 only F^1 survives, so the Euler class is -[F^1].
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& f = fixtures::all_fixtures()[rng() % fixtures::all_fixtures().size()];
    auto p = fixtures::load(f);
    std::int64_t mu = rng() % 16;
    std::int64_t dim_e = 1 + rng() % 3;
    auto e = ModuleDatumE::from_mu(p, mu, dim_e);
    auto f1 = f1_k_character(p, e, 30);
    auto euler = euler_k_character(t_character_N(p, e, 32), 30);
    for (int d = 0; d <= 30; ++d) ASSERT_EQ(euler.at(d), -f1.at(d)) << f.name << " mu=" << mu;
  }
}

TEST(F1, MinimalKTypeLaw) {
  for (const auto& f : fixtures::all_fixtures()) {
    auto p = fixtures::load(f);
    for (std::int64_t mu = 0; mu <= 15; ++mu)
      for (std::int64_t dim_e : {1, 2}) {
        auto ch = f1_k_character(p, ModuleDatumE::from_mu(p, mu, dim_e), 40);
        for (int d = 0; d < mu; ++d) EXPECT_EQ(ch.at(d), 0);
        EXPECT_EQ(ch.at(static_cast<int>(mu)), dim_e) << f.name << " mu=" << mu;
      }
  }
}

TEST(F1, ParityAndNonnegativity) {
  for (const auto& f : fixtures::all_fixtures()) {
    auto p = fixtures::load(f);
    bool even_weights = true;
    for (int w : p.n_weights) even_weights &= w % 2 == 0;
    for (std::int64_t mu = 0; mu <= 10; ++mu) {
      auto ch = f1_k_character(p, ModuleDatumE::from_mu(p, mu), 40);
      for (const auto& [d, m] : ch.mults) {
        EXPECT_GT(m, 0);
        if (even_weights) {
          EXPECT_EQ((d - mu) % 2, 0);
        }
      }
    }
  }
}

TEST(F1, DiagonalIsEvenTypes) {
  auto p = fixtures::load("sl2xsl2-diagonal");
  auto ch = f1_k_character(p, ModuleDatumE::from_mu(p, 0), 60);
  for (int d = 0; d <= 60; ++d) EXPECT_EQ(ch.at(d), d % 2 == 0 ? 1 : 0);
}

TEST(F1, PrincipalC2MatchesPartitionDifferences) {
  auto p = fixtures::load("sp4-principal");
  auto ch = f1_k_character(p, ModuleDatumE::from_mu(p, 0), 40);
  std::vector<int> w = {2, 2, 4, 6};
  for (int d = 0; d <= 40; ++d) EXPECT_EQ(ch.at(d), oracle::partitions(w, d) - (d >= 2 ? oracle::partitions(w, d - 2) : 0));
}

TEST(F1, NegativeMuOutOfRegime) {
  auto p = fixtures::load("sl3-root");
  try {
    f1_k_character(p, ModuleDatumE::from_mu(p, -1), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRegime);
  }
}

TEST(KCharacter, CutoffEnforced) {
  auto p = fixtures::load("sl3-root");
  auto ch = f1_k_character(p, ModuleDatumE::from_mu(p, 0), 10);
  EXPECT_THROW(ch.at(11), Error);
  EXPECT_EQ(ch.row().size(), 11u);
}
