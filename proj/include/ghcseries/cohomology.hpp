#ifndef GHCSERIES_COHOMOLOGY_HPP
#define GHCSERIES_COHOMOLOGY_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ghcseries/errors.hpp"
#include "ghcseries/parabolic.hpp"
#include "ghcseries/rational.hpp"

namespace ghcseries::cohomology {

using parabolic::CompatibleParabolic;
using parabolic::LambdaConvention;

/// Multiplicities of k-types V(delta), trusted for delta <= cutoff.
struct KCharacter {
  std::map<int, std::int64_t> mults;
  int cutoff = 0;
  bool is_virtual = false;

  std::int64_t at(int delta) const {
    if (delta > cutoff)
      fail(ErrorKind::WindowTooNarrow,
           "k-type " + std::to_string(delta) + " lies beyond the cutoff " + std::to_string(cutoff));
    auto it = mults.find(delta);
    return it == mults.end() ? 0 : it->second;
  }

  /// Dense row 0..cutoff.
  std::vector<std::int64_t> row() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(cutoff) + 1, 0);
    for (const auto& [d, m] : mults)
      if (d >= 0 && d <= cutoff) out[static_cast<std::size_t>(d)] = m;
    return out;
  }

  void set(int delta, std::int64_t m) {
    if (m == 0)
      mults.erase(delta);
    else
      mults[delta] = m;
  }

  void check_invariants() const {
    for (const auto& [d, m] : mults) {
      if (d < 0 || d > cutoff) fail(ErrorKind::InternalError, "k-character entry outside [0, cutoff]");
      if (!is_virtual && m < 0) fail(ErrorKind::InternalError, "negative multiplicity in a non-virtual k-character");
    }
  }

  friend bool operator==(const KCharacter&, const KCharacter&) = default;
};

/// Integer t-weights with multiplicities, trusted on [lo, hi]. Reading
/// outside the window raises WindowTooNarrow instead of returning 0.
struct TruncatedTCharacter {
  static constexpr int kUnbounded = std::numeric_limits<int>::max();

  std::map<int, std::int64_t> mults;
  int lo = -kUnbounded;
  int hi = kUnbounded;
  bool is_virtual = false;

  bool trusted(int weight) const { return weight >= lo && weight <= hi; }

  std::int64_t at(int weight) const {
    if (!trusted(weight))
      fail(ErrorKind::WindowTooNarrow, "t-weight " + std::to_string(weight) + " outside the trusted window [" +
                                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
    auto it = mults.find(weight);
    return it == mults.end() ? 0 : it->second;
  }

  std::int64_t total() const {
    std::int64_t sum = 0;
    for (const auto& [w, m] : mults) sum += m;
    return sum;
  }
};

/// Kostant's theorem for n_k one-dimensional: V(delta) contributes weight
/// delta to H^0 and weight -delta-2 to H^1.
inline std::pair<TruncatedTCharacter, TruncatedTCharacter> nk_cohomology(const KCharacter& m) {
  if (m.is_virtual) fail(ErrorKind::VirtualNotAllowed, "n_k-cohomology needs an honest module");
  TruncatedTCharacter h0, h1;
  h0.hi = m.cutoff;
  h1.lo = -m.cutoff - 2;
  for (const auto& [delta, c] : m.mults) {
    if (c == 0) continue;
    h0.mults[delta] += c;
    h1.mults[-delta - 2] += c;
  }
  return {h0, h1};
}

/// Entry j maps a weight x to the number of j-element submultisets with sum x.
inline std::vector<std::map<int, std::int64_t>> exterior_power_weights(const std::vector<int>& weights) {
  std::vector<std::map<int, std::int64_t>> e(weights.size() + 1);
  e[0][0] = 1;
  for (std::size_t k = 0; k < weights.size(); ++k)
    for (std::size_t j = k + 1; j-- > 0;)
      for (const auto& [x, c] : e[j]) e[j + 1][x + weights[k]] += c;
  return e;
}

/// dim (E_1^j)^kappa with
///   E_1^j = H^0(n_k, M) (x) L^j(n/\k^perp)^*  +  H^1(n_k, M) (x) L^{j-1}(n/\k^perp)^*.
inline std::int64_t e1_page_dimension(const KCharacter& m, const CompatibleParabolic& p, int j, int kappa) {
  if (j < 0 || j > p.r + 1)
    fail(ErrorKind::IndexOutOfRange, "j = " + std::to_string(j) + " outside [0, " + std::to_string(p.r + 1) + "]");
  auto [h0, h1] = nk_cohomology(m);
  auto lambda = exterior_power_weights(p.perp_weights());
  std::int64_t dim = 0;
  // A dual weight -x pairs with an H-weight kappa + x.
  if (j < static_cast<int>(lambda.size()))
    for (const auto& [x, c] : lambda[static_cast<std::size_t>(j)]) dim += c * h0.at(kappa + x);
  if (j >= 1 && j - 1 < static_cast<int>(lambda.size()))
    for (const auto& [x, c] : lambda[static_cast<std::size_t>(j - 1)]) dim += c * h1.at(kappa + x);
  return dim;
}

/// Sufficient condition for H^{dim n}(n, M)^kappa = 0: H^1(n_k, M) vanishes
/// at kappa' = kappa + 2 rho_n^perp.
inline bool top_n_vanishing(const KCharacter& m, const CompatibleParabolic& p, int kappa) {
  int shifted = kappa + parabolic::invariants(p).two_rho_n_perp;
  if (shifted > -2) return true;
  return nk_cohomology(m).second.at(shifted) == 0;
}

enum class Prop52Regime { Equality, UpperBound, None };

inline const char* to_string(Prop52Regime r) {
  switch (r) {
    case Prop52Regime::Equality: return "equality";
    case Prop52Regime::UpperBound: return "upper_bound";
    case Prop52Regime::None: return "none";
  }
  return "?";
}

/// Equality: dim H^r(n,M)^omega = dim H^0(n_k,M)^mu  (mu >= (l1+l2)/2).
/// UpperBound: <=                                     (mu >= l1/2).
inline Prop52Regime prop52_regime(const CompatibleParabolic& p, std::int64_t mu,
                                  LambdaConvention conv = LambdaConvention::Nilradical) {
  if (mu < 0) fail(ErrorKind::InvalidInput, "mu must be nonnegative");
  auto l = parabolic::invariants(p).lambdas(conv);
  if (2 * mu >= l.lambda1 + l.lambda2) return Prop52Regime::Equality;
  if (2 * mu >= l.lambda1) return Prop52Regime::UpperBound;
  return Prop52Regime::None;
}

}  // namespace ghcseries::cohomology

#endif  // GHCSERIES_COHOMOLOGY_HPP
