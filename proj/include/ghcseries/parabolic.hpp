#ifndef GHCSERIES_PARABOLIC_HPP
#define GHCSERIES_PARABOLIC_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ghcseries/errors.hpp"
#include "ghcseries/rational.hpp"
#include "ghcseries/rootsys.hpp"
#include "ghcseries/sl2embed.hpp"

namespace ghcseries::parabolic {

using rootsys::Weight;
using sl2::Sl2Embedding;

/*
  The minimal t-compatible parabolic p = m + n attached to an sl(2)
  embedding: n is spanned by the root spaces with alpha(h) > 0, m by the
  Cartan and the root spaces with alpha(h) = 0. Since n meets k in the line
  through e, s = 1 and r = dim n - 1.

  lambda_1 / lambda_2 come in two readings. The "nilradical" convention reads
  the maximum and submaximum off all of n (weight-2 line included) and is the
  one that reproduces the rank-2 tables; the "perp" convention reads them off
  n /\ k^perp, i.e. the n-weights with one copy of 2 removed. The nilradical
  convention is the default and never gives smaller thresholds.
*/

enum class LambdaConvention { Nilradical, Perp };

inline const char* to_string(LambdaConvention c) { return c == LambdaConvention::Nilradical ? "n" : "perp"; }

struct CompatibleParabolic {
  Sl2Embedding embedding;
  std::vector<Weight> n_roots;
  std::vector<Weight> m_roots;
  /// alpha(h) over n_roots, sorted descending.
  std::vector<int> n_weights;
  int s = 1;
  int r = 0;

  /// Weights of n /\ k^perp: n_weights minus one copy of 2.
  std::vector<int> perp_weights() const {
    std::vector<int> out = n_weights;
    auto it = std::find(out.begin(), out.end(), 2);
    if (it != out.end()) out.erase(it);
    return out;
  }

  bool levi_is_cartan() const { return m_roots.empty(); }
};

inline CompatibleParabolic minimal_parabolic(const Sl2Embedding& e) {
  CompatibleParabolic p;
  p.embedding = e;
  for (const auto& a : e.rs.roots) {
    int v = e.eval(a);
    if (v > 0) {
      p.n_roots.push_back(a);
      p.n_weights.push_back(v);
    } else if (v == 0) {
      p.m_roots.push_back(a);
    }
  }
  std::sort(p.n_weights.begin(), p.n_weights.end(), std::greater<>());
  if (std::find(p.n_weights.begin(), p.n_weights.end(), 2) == p.n_weights.end())
    fail(ErrorKind::NoSl2Triple, "nilradical has no weight-2 vector");
  p.r = static_cast<int>(p.n_roots.size()) - 1;
  return p;
}

struct LambdaPair {
  int lambda1 = 0;
  int lambda2 = 0;
  /// Fewer than two weights were available; lambda2 was set to lambda1.
  bool degenerate = false;
};

/// Maximum and submaximum of a multiset (lambda2 = lambda1 when the maximum
/// repeats or nothing else is present).
inline LambdaPair lambdas_of(std::vector<int> weights) {
  std::sort(weights.begin(), weights.end(), std::greater<>());
  LambdaPair out;
  if (weights.empty()) {
    out.degenerate = true;
    return out;
  }
  out.lambda1 = weights[0];
  if (weights.size() >= 2) {
    out.lambda2 = weights[1];
  } else {
    out.lambda2 = weights[0];
    out.degenerate = true;
  }
  return out;
}

struct ParabolicInvariants {
  Rational rho_n;
  int rho = 1;
  int two_rho_n_perp = 0;
  Weight rho_tilde_n;
  LambdaPair nilradical;
  LambdaPair perp;

  const LambdaPair& lambdas(LambdaConvention c) const { return c == LambdaConvention::Nilradical ? nilradical : perp; }
};

inline ParabolicInvariants invariants(const CompatibleParabolic& p) {
  ParabolicInvariants inv;
  int sum = 0;
  for (int w : p.n_weights) sum += w;
  inv.rho_n = Rational(sum, 2);
  inv.two_rho_n_perp = sum - 2;
  inv.rho_tilde_n = Weight::zero(p.embedding.rs.ambient_dim);
  for (const auto& a : p.n_roots) inv.rho_tilde_n = inv.rho_tilde_n + a;
  inv.rho_tilde_n = Rational(1, 2) * inv.rho_tilde_n;
  inv.nilradical = lambdas_of(p.n_weights);
  inv.perp = lambdas_of(p.perp_weights());
  return inv;
}

enum class MuOmegaDirection { MuToOmega, OmegaToMu };

/// omega = mu - 2 rho_n^perp and back.
inline std::int64_t mu_omega(const CompatibleParabolic& p, std::int64_t value, MuOmegaDirection dir) {
  std::int64_t shift = invariants(p).two_rho_n_perp;
  return dir == MuOmegaDirection::MuToOmega ? value - shift : value + shift;
}

struct GenericityResult {
  bool generic = false;
  bool condition1 = false;
  bool condition2 = false;
  /// A nonempty submultiset of the n-weights violating condition 2.
  std::optional<std::vector<int>> witness;
  /// rho_n - 1, as printed in the closed form.
  Rational closed_form_threshold;
  /// Smallest integer mu with mu + 2 > rho_n.
  std::int64_t min_generic_mu = 0;
};

/// Smallest integer mu with mu + 2 > rho_n. Equals rho_n - 1 whenever rho_n
/// is an integer.
inline std::int64_t min_generic_mu(const Rational& rho_n) { return floor_of(rho_n - 2) + 1; }

/// Scans every nonempty submultiset S of the n-weights:
///   (1) mu + 2 - rho_n >= 0   (paired against the single n_k weight 2),
///   (2) (mu + 2 - rho_S) * rho_S > 0.
/// The result is cross-checked against the closed form.
inline GenericityResult genericity_check(const CompatibleParabolic& p, std::int64_t mu) {
  if (mu < 0) fail(ErrorKind::InvalidInput, "mu must be nonnegative");
  auto inv = invariants(p);
  GenericityResult out;
  const Rational shifted = Rational(mu + 2);
  out.condition1 = shifted - inv.rho_n >= Rational(0);

  std::map<int, int> distinct;
  for (int w : p.n_weights) ++distinct[w];
  std::vector<std::pair<int, int>> items(distinct.begin(), distinct.end());
  std::vector<int> take(items.size(), 0);
  out.condition2 = true;
  while (true) {
    std::size_t i = 0;
    while (i < items.size() && take[i] == items[i].second) take[i++] = 0;
    if (i == items.size()) break;
    ++take[i];
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < items.size(); ++j) sum += static_cast<std::int64_t>(take[j]) * items[j].first;
    Rational rho_s(sum, 2);
    if ((shifted - rho_s) * rho_s <= Rational(0)) {
      out.condition2 = false;
      std::vector<int> s;
      for (std::size_t j = 0; j < items.size(); ++j)
        for (int k = 0; k < take[j]; ++k) s.push_back(items[j].first);
      std::sort(s.begin(), s.end(), std::greater<>());
      out.witness = s;
      break;
    }
  }
  out.generic = out.condition1 && out.condition2;
  out.closed_form_threshold = inv.rho_n - 1;
  out.min_generic_mu = min_generic_mu(inv.rho_n);
  if (out.generic != (mu >= out.min_generic_mu))
    fail(ErrorKind::InternalInconsistency, "submultiset scan disagrees with the closed-form genericity threshold");
  return out;
}

struct Threshold {
  Rational value;
  /// Smallest admissible integer mu >= 0.
  std::int64_t min_mu = 0;
};

inline Threshold make_threshold(const Rational& v) { return {v, std::max<std::int64_t>(0, ceil_of(v))}; }

struct BoundsReport {
  Threshold weak;
  Threshold socle_simple;
  Threshold strong;
  Threshold generic;
  Threshold socle_simple_perp;
  Threshold strong_perp;
  bool lambda2_degenerate = false;
  bool lambda2_degenerate_perp = false;
  /// Only for principal embeddings: 2 (sum_i r_i) - 1 where rho_tilde = 1/2 sum r_i alpha_i.
  std::optional<Threshold> prior_work;
  std::vector<Rational> prior_work_r;
};

inline BoundsReport bounds_report(const CompatibleParabolic& p) {
  auto inv = invariants(p);
  BoundsReport b;
  b.weak = make_threshold(Rational(0));
  b.socle_simple = make_threshold(Rational(inv.nilradical.lambda1, 2));
  b.strong = make_threshold(Rational(inv.nilradical.lambda1 + inv.nilradical.lambda2, 2));
  b.socle_simple_perp = make_threshold(Rational(inv.perp.lambda1, 2));
  b.strong_perp = make_threshold(Rational(inv.perp.lambda1 + inv.perp.lambda2, 2));
  b.lambda2_degenerate = inv.nilradical.degenerate;
  b.lambda2_degenerate_perp = inv.perp.degenerate;
  b.generic = {inv.rho_n - 1, std::max<std::int64_t>(0, min_generic_mu(inv.rho_n))};
  if (p.embedding.kind == sl2::EmbeddingKind::Principal) {
    const auto& rs = p.embedding.rs;
    auto coords = rootsys::simple_root_coordinates(rs.rho_tilde, rs.simple_roots);
    Rational sum(0);
    for (auto& c : coords) {
      c *= 2;
      sum += c;
    }
    b.prior_work_r = coords;
    b.prior_work = make_threshold(Rational(2) * sum - 1);
  }
  return b;
}

/// <kappa, gamma> >= 0 for every root of n and every positive root of m.
inline bool b_dominant(const CompatibleParabolic& p, const Weight& kappa) {
  const auto& rs = p.embedding.rs;
  for (const auto& g : rs.positive_roots)
    if (rootsys::inner_product(kappa, g) < Rational(0)) return false;
  return true;
}

}  // namespace ghcseries::parabolic

#endif  // GHCSERIES_PARABOLIC_HPP
