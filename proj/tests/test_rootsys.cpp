#include <gtest/gtest.h>

#include "ghcseries/fixtures.hpp"
#include "ghcseries/rootsys.hpp"
#include "support/oracles.hpp"

using namespace ghcseries;
using namespace ghcseries::rootsys;

namespace {

RootSystem rs_of(const std::string& s) { return build_root_system(fixtures::parse_algebra(s)); }

Weight w(std::initializer_list<Rational> c) { return Weight{std::vector<Rational>(c)}; }

}  // namespace

TEST(RootSystem, RootCountsAndRanks) {
  struct Row {
    const char* alg;
    std::size_t roots, rank, weyl;
  };
  for (auto r : {Row{"A1", 2, 1, 2}, Row{"A2", 6, 2, 6}, Row{"B2", 8, 2, 8}, Row{"C2", 8, 2, 8}, Row{"G2", 12, 2, 12},
                 Row{"A1+A1", 4, 2, 4}, Row{"A3", 12, 3, 24}, Row{"B3", 18, 3, 48}, Row{"D4", 24, 4, 192}}) {
    auto rs = rs_of(r.alg);
    EXPECT_EQ(rs.roots.size(), r.roots) << r.alg;
    EXPECT_EQ(rs.rank(), r.rank) << r.alg;
    EXPECT_EQ(rs.positive_roots.size() * 2, rs.roots.size()) << r.alg;
    EXPECT_EQ(weyl_group(rs).size(), r.weyl) << r.alg;
  }
}

TEST(RootSystem, RejectsUnsupported) {
  EXPECT_THROW(rs_of("A5"), Error);
  EXPECT_THROW(rs_of("A2+A3"), Error);
  try {
    rs_of("G3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedAlgebra);
  }
}

TEST(RootSystem, C2Roots) {
  auto rs = rs_of("C2");
  EXPECT_TRUE(rs.is_root(w({2, 0})));
  EXPECT_TRUE(rs.is_root(w({1, -1})));
  EXPECT_FALSE(rs.is_root(w({1, 0})));
}

TEST(RootSystem, ReflectionsPreserveRoots) {
  for (const char* alg : {"A2", "B2", "C2", "G2", "A3", "B3", "C3"}) {
    auto rs = rs_of(alg);
    for (const auto& a : rs.roots)
      for (const auto& b : rs.roots) EXPECT_TRUE(rs.is_root(reflect(b, a))) << alg;
  }
}

TEST(RootSystem, SimpleRootsDecomposePositives) {
  for (const char* alg : {"A2", "C2", "G2", "A3", "B3", "A1+A2"}) {
    auto rs = rs_of(alg);
    for (const auto& a : rs.positive_roots) {
      auto c = simple_root_coordinates(a, rs.simple_roots);
      for (const auto& x : c) {
        EXPECT_TRUE(is_integer(x));
        EXPECT_GE(x, Rational(0));
      }
    }
  }
}

TEST(RootSystem, DimensionMismatch) {
  try {
    inner_product(w({1, 0}), w({1, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(WeylGroup, LongestElementLengthIsNumberOfPositiveRoots) {
  for (const char* alg : {"A2", "C2", "G2", "A3", "A1+A1"}) {
    auto rs = rs_of(alg);
    auto g = weyl_group(rs);
    int longest = 0;
    for (const auto& x : g.elements()) longest = std::max(longest, x.length);
    EXPECT_EQ(longest, static_cast<int>(rs.positive_roots.size())) << alg;
  }
}

TEST(WeylGroup, BruhatMatchesSubwordOracle) {
  for (const char* alg : {"A1", "A2", "B2", "G2", "A1+A1", "A3", "A1+A2"}) {
    auto g = weyl_group(rs_of(alg));
    for (const auto& x : g.elements())
      for (const auto& y : g.elements())
        EXPECT_EQ(g.bruhat_leq(x, y), oracle::subword_leq(x, y, g)) << alg;
  }
}

TEST(WeylGroup, ChainClosureMatchesDihedralRule) {
  for (const char* alg : {"A2", "C2", "G2", "A1+A1"}) {
    auto g = weyl_group(rs_of(alg));
    for (const auto& x : g.elements())
      for (const auto& y : g.elements()) EXPECT_EQ(g.bruhat_leq(x, y), g.chain_leq(x, y)) << alg;
  }
}

TEST(WeylGroup, ForeignElementIsGroupMismatch) {
  auto a2 = weyl_group(rs_of("A2"));
  auto a1a1 = weyl_group(rs_of("A1+A1"));
  try {
    a2.index_of(a1a1.elements().back().matrix);
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.kind() == ErrorKind::GroupMismatch || e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST(WeylGroup, DotOrbitSizes) {
  auto rs = rs_of("C2");
  auto g = weyl_group(rs);
  EXPECT_EQ(orbit_points(w({Rational(3, 2), Rational(1, 2)}), g).size(), 8u);
  EXPECT_EQ(orbit_points(w({1, 1}), g).size(), 4u);
  EXPECT_EQ(stabilizer_size(w({1, 1}), g), 2u);
  EXPECT_EQ(dot_orbit(w({1, 1}), g).size(), 8u);
}

TEST(Positivity, PrincipalRefinement) {
  auto rs = with_positivity(rs_of("C2"), w({3, 1}));
  for (const auto& a : rs.positive_roots) EXPECT_GT(inner_product(a, w({3, 1})), Rational(0));
  EXPECT_EQ(rs.rho_tilde, w({2, 1}));
}
