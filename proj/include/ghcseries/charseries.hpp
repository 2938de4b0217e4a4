#ifndef GHCSERIES_CHARSERIES_HPP
#define GHCSERIES_CHARSERIES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghcseries/cohomology.hpp"
#include "ghcseries/errors.hpp"
#include "ghcseries/parabolic.hpp"
#include "ghcseries/rootsys.hpp"

namespace ghcseries::charseries {

using cohomology::KCharacter;
using cohomology::TruncatedTCharacter;
using parabolic::CompatibleParabolic;

inline constexpr int kDefaultCutoff = 60;

/// A simple finite-dimensional p-module E, seen through its t-weight omega
/// and dimension. nu is its b-highest weight when known.
struct ModuleDatumE {
  std::int64_t omega = 0;
  std::int64_t dim_e = 1;
  std::optional<rootsys::Weight> nu;

  /// mu = omega + 2 rho_n^perp, the minimal k-type of F^1(p, E).
  std::int64_t mu(const CompatibleParabolic& p) const { return omega + parabolic::invariants(p).two_rho_n_perp; }

  static ModuleDatumE from_mu(const CompatibleParabolic& p, std::int64_t mu, std::int64_t dim_e = 1) {
    ModuleDatumE e;
    e.omega = parabolic::mu_omega(p, mu, parabolic::MuOmegaDirection::MuToOmega);
    e.dim_e = dim_e;
    return e;
  }
};

/// Colored partition counts: the number of multisets of root vectors (each
/// weight occurrence its own color) whose weights sum to x.
class PartitionTable {
 public:
  PartitionTable(std::vector<int> weights, int max_x) : weights_(std::move(weights)) {
    for (int w : weights_)
      if (w <= 0) fail(ErrorKind::InvalidInput, "partition weights must be positive");
    extend(max_x);
  }

  const std::vector<int>& weights() const { return weights_; }
  int max_x() const { return static_cast<int>(values_.size()) - 1; }

  std::int64_t operator()(int x) {
    if (x < 0) return 0;
    if (x > max_x()) extend(x);
    return values_[static_cast<std::size_t>(x)];
  }

  std::int64_t at(int x) const {
    if (x < 0) return 0;
    if (x > max_x()) fail(ErrorKind::WindowTooNarrow, "partition table computed only up to " + std::to_string(max_x()));
    return values_[static_cast<std::size_t>(x)];
  }

 private:
  void extend(int max_x) {
    // One pass per colour: values[x] += values[x - w].
    std::vector<std::int64_t> v(static_cast<std::size_t>(std::max(max_x, 0)) + 1, 0);
    v[0] = 1;
    for (int w : weights_)
      for (std::size_t x = static_cast<std::size_t>(w); x < v.size(); ++x)
        if (__builtin_add_overflow(v[x], v[x - static_cast<std::size_t>(w)], &v[x]))
          fail(ErrorKind::InternalError, "partition count overflows 64 bits");
    values_ = std::move(v);
  }

  std::vector<int> weights_;
  std::vector<std::int64_t> values_;
};

inline std::int64_t partition_function(const std::vector<int>& weights, int x) {
  if (x < 0) return 0;
  return PartitionTable(weights, x).at(x);
}

/// t-character of N_p(E): dim E * P_n(x - mu - 2) at x >= mu + 2, zero below.
inline TruncatedTCharacter t_character_N(const CompatibleParabolic& p, const ModuleDatumE& e, int cutoff) {
  TruncatedTCharacter out;
  out.hi = cutoff;
  const std::int64_t base = e.mu(p) + 2;
  if (base > cutoff) return out;
  PartitionTable table(p.n_weights, static_cast<int>(cutoff - base));
  for (std::int64_t x = base; x <= cutoff; ++x) {
    std::int64_t c = e.dim_e * table.at(static_cast<int>(x - base));
    if (c) out.mults[static_cast<int>(x)] = c;
  }
  return out;
}

/// Euler characteristic over k of a t-weight module N, by k-type:
///   [V(delta)] : m(delta) + m(-delta) - m(delta+2) - m(-delta-2).
/// N must be trusted on [-cutoff-2, cutoff+2].
inline KCharacter euler_k_character(const TruncatedTCharacter& n, int cutoff) {
  if (cutoff < 0) fail(ErrorKind::InvalidInput, "cutoff must be nonnegative");
  if (!n.trusted(cutoff + 2) || !n.trusted(-cutoff - 2))
    fail(ErrorKind::WindowTooNarrow, "t-character must be trusted on [" + std::to_string(-cutoff - 2) + ", " +
                                         std::to_string(cutoff + 2) + "]");
  KCharacter out;
  out.cutoff = cutoff;
  out.is_virtual = true;
  for (int d = 0; d <= cutoff; ++d) out.set(d, n.at(d) + n.at(-d) - n.at(d + 2) - n.at(-d - 2));
  return out;
}

/// k-character of F^1(p, E) for mu >= 0:
///   [V(delta)] : dim E * (P_n(delta - mu) - P_n(delta - mu - 2)).
inline KCharacter f1_k_character(const CompatibleParabolic& p, const ModuleDatumE& e, int cutoff) {
  const std::int64_t mu = e.mu(p);
  if (mu < 0)
    fail(ErrorKind::OutOfRegime, "mu = " + std::to_string(mu) + " < 0: F^0 and F^2 need not vanish");
  KCharacter out;
  out.cutoff = cutoff;
  if (mu > cutoff) return out;
  PartitionTable table(p.n_weights, static_cast<int>(cutoff - mu));
  for (std::int64_t d = mu; d <= cutoff; ++d) {
    int x = static_cast<int>(d - mu);
    out.set(static_cast<int>(d), e.dim_e * (table.at(x) - table.at(x - 2)));
  }
  out.check_invariants();
  return out;
}

}  // namespace ghcseries::charseries

#endif  // GHCSERIES_CHARSERIES_HPP
