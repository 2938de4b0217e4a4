#include <gtest/gtest.h>

#include <random>

#include "ghcseries/cohomology.hpp"
#include "ghcseries/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ghcseries;
using namespace ghcseries::cohomology;

namespace {

KCharacter random_k_character(std::mt19937& rng, int cutoff) {
  KCharacter m;
  m.cutoff = cutoff;
  std::uniform_int_distribution<int> mult(0, 3);
  for (int d = 0; d <= cutoff; ++d) m.set(d, mult(rng));
  return m;
}

}  // namespace

TEST(Kostant, H0AndH1Weights) {
  KCharacter m;
  m.cutoff = 10;
  m.set(0, 1);
  m.set(3, 2);
  auto [h0, h1] = nk_cohomology(m);
  EXPECT_EQ(h0.at(0), 1);
  EXPECT_EQ(h0.at(3), 2);
  EXPECT_EQ(h1.at(-2), 1);
  EXPECT_EQ(h1.at(-5), 2);
  EXPECT_EQ(h1.at(0), 0);
  EXPECT_THROW(h0.at(11), Error);
  EXPECT_THROW(h1.at(-13), Error);
}

TEST(Kostant, DimensionsAddUp) {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto m = random_k_character(rng, 12);
    auto [h0, h1] = nk_cohomology(m);
    std::int64_t types = 0;
    for (const auto& [d, c] : m.mults) types += c;
    EXPECT_EQ(h0.total(), types);
    EXPECT_EQ(h1.total(), types);
  }
}

TEST(Kostant, VirtualRejected) {
  KCharacter m;
  m.is_virtual = true;
  try {
    nk_cohomology(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VirtualNotAllowed);
  }
}

TEST(ExteriorPowers, MatchBitmaskOracle) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> wt(1, 6), len(0, 7);
  for (int i = 0; i < 60; ++i) {
    std::vector<int> w(static_cast<std::size_t>(len(rng)));
    for (auto& x : w) x = wt(rng);
    auto e = exterior_power_weights(w);
    ASSERT_EQ(e.size(), w.size() + 1);
    for (std::size_t j = 0; j <= w.size(); ++j)
      for (int x = 0; x <= 42; ++x) {
        auto it = e[j].find(x);
        std::int64_t got = it == e[j].end() ? 0 : it->second;
        EXPECT_EQ(got, oracle::exterior_count(w, j, x));
      }
  }
}

TEST(E1Page, MatchesDirectSum) {
  auto p = fixtures::load("sp4-principal");
  auto perp = p.perp_weights();
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_k_character(rng, 30);
    auto [h0, h1] = nk_cohomology(m);
    for (int j = 0; j <= p.r + 1; ++j)
      for (int kappa = -8; kappa <= 8; ++kappa) {
        std::int64_t want = 0;
        for (int x = 0; x <= 12; ++x) {  // perp weights {6, 4, 2} sum to 12
          if (j <= static_cast<int>(perp.size())) want += oracle::exterior_count(perp, static_cast<std::size_t>(j), x) * h0.at(kappa + x);
          if (j >= 1) want += oracle::exterior_count(perp, static_cast<std::size_t>(j - 1), x) * h1.at(kappa + x);
        }
        EXPECT_EQ(e1_page_dimension(m, p, j, kappa), want);
      }
  }
}

TEST(E1Page, IndexOutOfRange) {
  auto p = fixtures::load("sl3-root");
  KCharacter m;
  m.cutoff = 10;
  EXPECT_THROW(e1_page_dimension(m, p, p.r + 2, 0), Error);
  EXPECT_THROW(e1_page_dimension(m, p, -1, 0), Error);
}

TEST(TopVanishing, AboveMinusTwo) {
  auto p = fixtures::load("sp4-principal");
  KCharacter m;
  m.cutoff = 40;
  for (int d = 0; d <= 40; ++d) m.set(d, 1);
  // kappa + 12 > -2 always vanishes.
  EXPECT_TRUE(top_n_vanishing(m, p, -13));
  // kappa + 12 = -2 - d hits V(d).
  EXPECT_FALSE(top_n_vanishing(m, p, -14));
  KCharacter sparse;
  sparse.cutoff = 40;
  sparse.set(5, 1);
  EXPECT_TRUE(top_n_vanishing(sparse, p, -14));
  EXPECT_FALSE(top_n_vanishing(sparse, p, -19));
}

TEST(Regime, Thresholds) {
  auto p = fixtures::load("sp4-principal");
  EXPECT_EQ(prop52_regime(p, 2), Prop52Regime::None);
  EXPECT_EQ(prop52_regime(p, 3), Prop52Regime::UpperBound);
  EXPECT_EQ(prop52_regime(p, 4), Prop52Regime::UpperBound);
  EXPECT_EQ(prop52_regime(p, 5), Prop52Regime::Equality);
  auto root = fixtures::load("sl3-root");
  EXPECT_EQ(prop52_regime(root, 1), Prop52Regime::UpperBound);
  EXPECT_EQ(prop52_regime(root, 2), Prop52Regime::Equality);
  EXPECT_EQ(prop52_regime(root, 1, parabolic::LambdaConvention::Perp), Prop52Regime::Equality);
}
