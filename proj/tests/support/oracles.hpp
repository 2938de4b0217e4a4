// Brute-force reference computations. Nothing here reuses the library's
// algorithms; only its value types.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "ghcseries/fixtures.hpp"
#include "ghcseries/parabolic.hpp"
#include "ghcseries/rootsys.hpp"

namespace oracle {

using ghcseries::Rational;
using ghcseries::rootsys::Matrix;
using ghcseries::rootsys::Weight;

/// Number of ways to write x as sum_i c_i w_i with c_i >= 0, one colour per
/// entry, by plain recursion.
inline std::int64_t partitions(const std::vector<int>& w, int x, std::size_t i = 0) {
  if (x == 0) return 1;
  if (x < 0 || i == w.size()) return 0;
  std::int64_t total = 0;
  for (int used = 0; used <= x; used += w[i]) total += partitions(w, x - used, i + 1);
  return total;
}

/// Number of j-element subsets (of positions) with weight sum x, by bitmask.
inline std::int64_t exterior_count(const std::vector<int>& w, std::size_t j, int x) {
  std::int64_t n = 0;
  for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != j) continue;
    int s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (mask & (1u << i)) s += w[i];
    if (s == x) ++n;
  }
  return n;
}

/// Euler characteristic of Hom_t(L^i(k/t) (x) V(delta), N), i = 0, 1, 2,
/// where k/t carries the t-weights +2 and -2. Each Hom space is counted
/// weight by weight.
inline std::int64_t koszul_euler(const std::map<int, std::int64_t>& n, int delta) {
  auto m = [&](int x) {
    auto it = n.find(x);
    return it == n.end() ? std::int64_t{0} : it->second;
  };
  std::vector<std::vector<int>> exterior = {{0}, {2, -2}, {0}};
  std::int64_t euler = 0;
  for (std::size_t i = 0; i < exterior.size(); ++i) {
    std::int64_t dim = 0;
    for (int a : exterior[i])
      for (int x = -delta; x <= delta; x += 2) dim += m(a + x);
    euler += (i % 2 == 0 ? 1 : -1) * dim;
  }
  return euler;
}

/// Products of all subwords of a reduced word of y; x <= y iff x is among them.
inline bool subword_leq(const ghcseries::rootsys::WeylElement& x, const ghcseries::rootsys::WeylElement& y,
                        const ghcseries::rootsys::WeylGroup& g) {
  using namespace ghcseries::rootsys;
  std::vector<Matrix> word;
  Matrix cur = y.matrix;
  int len = y.length;
  while (len > 0) {
    bool found = false;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      Matrix s = reflection_matrix(g.simple_roots()[i]);
      Matrix shorter = multiply(s, cur);
      if (g.length(shorter) < len) {
        word.push_back(s);
        cur = shorter;
        --len;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  std::set<Matrix> products;
  for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
    Matrix p = identity_matrix(g.ambient_dim());
    for (std::size_t i = 0; i < word.size(); ++i)
      if (mask & (1u << i)) p = multiply(p, word[i]);
    products.insert(p);
  }
  return products.count(x.matrix) > 0;
}

/// Genericity by definition, over subsets of positions of the n-weights.
inline bool generic_by_definition(const std::vector<int>& n_weights, std::int64_t mu) {
  int total = 0;
  for (int w : n_weights) total += w;
  const Rational shifted(mu + 2);
  if (shifted - Rational(total, 2) < Rational(0)) return false;
  for (std::uint32_t mask = 1; mask < (1u << n_weights.size()); ++mask) {
    int s = 0;
    for (std::size_t i = 0; i < n_weights.size(); ++i)
      if (mask & (1u << i)) s += n_weights[i];
    Rational rho_s(s, 2);
    if ((shifted - rho_s) * rho_s <= Rational(0)) return false;
  }
  return true;
}

/// Random valid (algebra, h) pairs of rank <= 3, from a fixed seed.
class PairGenerator {
 public:
  explicit PairGenerator(std::uint32_t seed) : rng_(seed) {}

  ghcseries::parabolic::CompatibleParabolic next() {
    static const std::vector<std::string> algebras = {"A1", "A2", "B2", "C2", "G2", "A1+A1", "A3", "B3", "C3", "A1+A2"};
    while (true) {
      const std::string& alg = algebras[pick(algebras.size())];
      auto rs = ghcseries::rootsys::build_root_system(ghcseries::fixtures::parse_algebra(alg));
      try {
        switch (pick(3)) {
          case 0: return ghcseries::parabolic::minimal_parabolic(ghcseries::sl2::from_principal(rs));
          case 1: return ghcseries::parabolic::minimal_parabolic(ghcseries::sl2::from_root(rs, rs.roots[pick(rs.roots.size())]));
          default: {
            std::vector<Rational> values;
            for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) values.push_back(Rational(static_cast<int>(pick(3))));
            auto h = ghcseries::rootsys::solve_in_span(rs.simple_roots, values);
            return ghcseries::parabolic::minimal_parabolic(ghcseries::sl2::from_defining_vector(rs, h));
          }
        }
      } catch (const ghcseries::Error&) {
        // not the characteristic of an sl(2); draw again
      }
    }
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

}  // namespace oracle
