#ifndef GHCSERIES_BLOCKS_HPP
#define GHCSERIES_BLOCKS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ghcseries/charseries.hpp"
#include "ghcseries/cohomology.hpp"
#include "ghcseries/errors.hpp"
#include "ghcseries/parabolic.hpp"
#include "ghcseries/rational.hpp"
#include "ghcseries/rootsys.hpp"
#include "ghcseries/sl2embed.hpp"

namespace ghcseries::blocks {

using cohomology::KCharacter;
using parabolic::CompatibleParabolic;
using parabolic::LambdaConvention;
using rootsys::RootSystem;
using rootsys::Weight;
using rootsys::WeylElement;
using rootsys::WeylGroup;

/// theta_kappa, recorded by the lexicographically largest point of W kappa.
struct CentralCharacter {
  Weight representative;
  bool regular = false;
  bool integral = false;

  friend bool operator==(const CentralCharacter&, const CentralCharacter&) = default;
};

inline bool is_integral_weight(const Weight& kappa, const RootSystem& rs) {
  for (const auto& a : rs.roots)
    if (!is_integer(rootsys::coroot_pairing(kappa, a))) return false;
  return true;
}

inline CentralCharacter central_character_of_kappa(const Weight& kappa, const RootSystem& rs) {
  rootsys::require_same_dim(kappa, Weight::zero(rs.ambient_dim));
  auto group = rootsys::weyl_group(rs);
  auto points = rootsys::orbit_points(kappa, group);
  CentralCharacter cc;
  cc.representative = points.back();
  cc.regular = points.size() == group.size();
  cc.integral = is_integral_weight(kappa, rs);
  return cc;
}

/// Central character of modules with b-highest weight nu: theta_{nu + rho_tilde}.
inline CentralCharacter central_character(const Weight& nu, const RootSystem& rs) {
  return central_character_of_kappa(nu + rs.rho_tilde, rs);
}

/// Reflection subgroup generated by s_alpha with <kappa, alpha^vee> integral,
/// with positive system inherited from rs.
inline WeylGroup integral_weyl_subgroup(const Weight& kappa, const RootSystem& rs) {
  std::vector<Weight> positives;
  for (const auto& a : rs.positive_roots)
    if (is_integer(rootsys::coroot_pairing(kappa, a))) positives.push_back(a);
  return WeylGroup(positives, rs.ambient_dim);
}

struct BlockElement {
  WeylElement w;
  Weight nu;  // w(kappa) - rho_tilde
  std::int64_t omega = 0;
  std::int64_t mu = 0;
  bool m_dominant = true;
  std::int64_t dim_e = 1;

  charseries::ModuleDatumE datum() const {
    charseries::ModuleDatumE e;
    e.omega = omega;
    e.dim_e = dim_e;
    e.nu = nu;
    return e;
  }
};

namespace detail {

/// The single positive root of m when m_ss is sl(2); nullopt when m = h.
inline std::optional<Weight> levi_sl2_root(const CompatibleParabolic& p) {
  if (p.m_roots.empty()) return std::nullopt;
  if (p.m_roots.size() != 2)
    fail(ErrorKind::UnsupportedLevi,
         "Levi factor has " + std::to_string(p.m_roots.size()) + " roots; only m = h or m_ss = sl(2) are supported");
  const auto& rs = p.embedding.rs;
  return rs.is_positive(p.m_roots[0]) ? p.m_roots[0] : p.m_roots[1];
}

}  // namespace detail

/// Fundamental-series parameters with central character kappa: nu = w(kappa)
/// - rho_tilde over W, merged by equal nu, restricted to m-dominant integral
/// nu when m != h. Points with non-integral omega = nu(h) carry no k-type
/// and are dropped. Sorted by ascending mu, then nu.
inline std::vector<BlockElement> enumerate_block(const CentralCharacter& kappa, const CompatibleParabolic& p) {
  const auto& e = p.embedding;
  const auto& rs = e.rs;
  auto levi_root = detail::levi_sl2_root(p);
  const std::int64_t shift = parabolic::invariants(p).two_rho_n_perp;
  auto group = rootsys::weyl_group(rs);

  std::vector<BlockElement> out;
  std::set<Weight> seen;
  for (const auto& [w, point] : rootsys::dot_orbit(kappa.representative, group)) {
    Weight nu = point - rs.rho_tilde;
    if (!seen.insert(nu).second) continue;
    Rational omega = rootsys::inner_product(nu, e.h_vector);
    if (!is_integer(omega)) continue;
    BlockElement b{w, nu, omega.numerator(), omega.numerator() + shift, true, 1};
    if (levi_root) {
      Rational pairing = rootsys::coroot_pairing(nu, *levi_root);
      if (!is_integer(pairing) || pairing < Rational(0)) continue;
      b.dim_e = pairing.numerator() + 1;
    }
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const BlockElement& a, const BlockElement& b) {
    if (a.mu != b.mu) return a.mu < b.mu;
    return a.nu < b.nu;
  });
  return out;
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size();
  IntMatrix out(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline IntMatrix identity(std::size_t n) {
  IntMatrix out(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

/// Inverse of an upper unitriangular integer matrix (exact back substitution).
inline IntMatrix invert_unitriangular(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 1) fail(ErrorKind::InternalInconsistency, "diagonal entry is not 1");
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != 0) fail(ErrorKind::InternalInconsistency, "matrix is not upper triangular");
  }
  IntMatrix p = identity(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j; i-- > 0;) {
      std::int64_t s = 0;
      for (std::size_t k = i + 1; k <= j; ++k) s += m[i][k] * p[k][j];
      p[i][j] = -s;
    }
  return p;
}

/// m(E, D) = [N_p(E) : L_p(D)] over a block, and its inverse p(E, D).
struct MultiplicityMatrix {
  std::vector<BlockElement> elements;
  IntMatrix m;
  IntMatrix p;
  /// Linkage class (coset of the integral Weyl group) of each element.
  std::vector<int> linkage_class;
  /// Position of each element inside its class's Weyl group, as a length.
  std::vector<int> class_length;

  std::size_t size() const { return elements.size(); }

  std::size_t index_of_mu(std::int64_t mu) const {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i].mu == mu) {
        if (found) fail(ErrorKind::InvalidInput, "several block elements have mu = " + std::to_string(mu));
        found = i;
      }
    if (!found) fail(ErrorKind::InvalidInput, "no block element has mu = " + std::to_string(mu));
    return *found;
  }
};

/*
  Multiplicities for m = h, rank <= 2 and regular kappa.

  Dualizing, N_b(E) has the composition factors of the Verma module with
  highest weight -nu_E - 2 rho_tilde, whose rho-shifted weight is
  Lambda_E = -(nu_E + rho_tilde). Inside the integral Weyl group W_Lambda,
  with Lambda_dom the W_Lambda-dominant point of the linkage class and
  Lambda_E = x_E(Lambda_dom), one has [M(x.l) : L(y.l)] = P_{x,y}(1) for
  x <= y. All Kazhdan-Lusztig polynomials of rank <= 2 Weyl groups (dihedral
  or products of A1) are 1, so m(E, D) = 1 iff x_E <= x_D in Bruhat order.
*/
inline MultiplicityMatrix multiplicity_matrix(const CentralCharacter& kappa, const CompatibleParabolic& p) {
  const auto& rs = p.embedding.rs;
  if (!p.levi_is_cartan()) fail(ErrorKind::UnsupportedLevi, "multiplicities are implemented only for m = h");
  if (rs.rank() > 2)
    fail(ErrorKind::UnsupportedRank, "multiplicities are implemented only for rank <= 2, got rank " +
                                         std::to_string(rs.rank()));
  if (!kappa.regular) fail(ErrorKind::SingularBlockUnsupported, "central character " +
                                                                    rootsys::to_string(kappa.representative) +
                                                                    " is singular");

  MultiplicityMatrix mm;
  mm.elements = enumerate_block(kappa, p);
  const std::size_t n = mm.elements.size();
  std::vector<Weight> lambda(n);
  for (std::size_t i = 0; i < n; ++i) lambda[i] = -(mm.elements[i].nu + rs.rho_tilde);

  mm.linkage_class.assign(n, -1);
  mm.class_length.assign(n, 0);
  std::vector<WeylElement> position(n);
  std::vector<WeylGroup> groups;
  for (std::size_t i = 0; i < n; ++i) {
    if (mm.linkage_class[i] >= 0) continue;
    const int cls = static_cast<int>(groups.size());
    groups.push_back(integral_weyl_subgroup(lambda[i], rs));
    const WeylGroup& group = groups.back();
    std::optional<Weight> dominant;
    for (const auto& pt : rootsys::orbit_points(lambda[i], group)) {
      bool dom = std::all_of(group.simple_roots().begin(), group.simple_roots().end(),
                             [&](const Weight& a) { return rootsys::inner_product(pt, a) > Rational(0); });
      if (dom) dominant = pt;
    }
    if (!dominant) fail(ErrorKind::InternalInconsistency, "no regular dominant point in a regular linkage class");
    for (const auto& x : group.elements()) {
      Weight image = x(*dominant);
      for (std::size_t j = 0; j < n; ++j)
        if (lambda[j] == image) {
          mm.linkage_class[j] = cls;
          mm.class_length[j] = x.length;
          position[j] = x;
        }
    }
  }

  mm.m.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (mm.linkage_class[i] != mm.linkage_class[j]) continue;
      const auto& group = groups[static_cast<std::size_t>(mm.linkage_class[i])];
      if (group.bruhat_leq(position[i], position[j])) mm.m[i][j] = 1;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && mm.m[i][j] && mm.elements[j].mu <= mm.elements[i].mu)
        fail(ErrorKind::InternalInconsistency, "composition factor with mu_D <= mu_E off the diagonal");
  mm.p = invert_unitriangular(mm.m);
  if (multiply(mm.m, mm.p) != identity(n)) fail(ErrorKind::InternalInconsistency, "m * p != identity");
  return mm;
}

struct SocleCharacter {
  KCharacter character;
  /// mu_E >= lambda_1 / 2: the character is that of Soc F^1(p, E), not only
  /// of R^1 Gamma(L_p(E)).
  bool is_socle = false;
  std::int64_t mu = 0;
};

/// ch_k of R^1 Gamma_{k,t}(L_p(E)) = sum_D p(E, D) ch_k F^1(p, D).
inline SocleCharacter socle_k_character(const CompatibleParabolic& p, const MultiplicityMatrix& mm, std::size_t e_index,
                                        int cutoff, LambdaConvention conv = LambdaConvention::Nilradical) {
  if (e_index >= mm.size()) fail(ErrorKind::IndexOutOfRange, "block element index out of range");
  const auto& e = mm.elements[e_index];
  if (e.mu < 0) fail(ErrorKind::OutOfRegime, "mu = " + std::to_string(e.mu) + " < 0");
  SocleCharacter out;
  out.mu = e.mu;
  out.character.cutoff = cutoff;
  for (std::size_t d = 0; d < mm.size(); ++d) {
    std::int64_t coeff = mm.p[e_index][d];
    if (coeff == 0) continue;
    auto f1 = charseries::f1_k_character(p, mm.elements[d].datum(), cutoff);
    for (const auto& [delta, mult] : f1.mults) out.character.set(delta, out.character.at(delta) + coeff * mult);
  }
  for (const auto& [delta, mult] : out.character.mults)
    if (mult < 0)
      fail(ErrorKind::InternalInconsistency,
           "negative multiplicity " + std::to_string(mult) + " at k-type " + std::to_string(delta));
  auto l = parabolic::invariants(p).lambdas(conv);
  out.is_socle = 2 * e.mu >= l.lambda1;
  return out;
}

struct ReconstructibilityReport {
  std::int64_t mu = 0;
  bool f0_f2_vanish = false;        // mu >= 0
  bool socle_simple = false;        // mu >= lambda1 / 2
  bool strong_bijection = false;    // mu >= (lambda1 + lambda2) / 2
  bool generic = false;             // mu >= rho_n - 1
  bool regular_k = false;           // strengthening for regular k applies
  bool weak_only = false;           // mu >= 0 but below the socle threshold
};

inline ReconstructibilityReport reconstructibility_report(const CompatibleParabolic& p, std::int64_t mu,
                                                          LambdaConvention conv = LambdaConvention::Nilradical) {
  if (mu < 0) fail(ErrorKind::InvalidInput, "mu must be nonnegative");
  auto l = parabolic::invariants(p).lambdas(conv);
  ReconstructibilityReport r;
  r.mu = mu;
  r.f0_f2_vanish = true;
  r.socle_simple = 2 * mu >= l.lambda1;
  r.strong_bijection = 2 * mu >= l.lambda1 + l.lambda2;
  r.generic = parabolic::genericity_check(p, mu).generic;
  r.regular_k = sl2::is_regular(p.embedding);
  r.weak_only = !r.socle_simple;
  return r;
}

struct IwasawaSupport {
  std::int64_t a = 0;
  Rational c;
  /// b = c - 3a + 6j, 0 <= j <= a.
  std::vector<Rational> b_values;
  /// Multiplicity of V(a) after restriction to k.
  std::int64_t k_multiplicity = 0;
};

/// k~-types V(a rho + b zeta) of the sl(3) principal series X(p_I, L_chi)
/// with chi(h_I) = c, where h_I = 3h + k acts on V(a rho + b zeta) by
/// 3a + b - 6j.
inline IwasawaSupport iwasawa_sl3_support(std::int64_t a, const Rational& c) {
  if (a < 0) fail(ErrorKind::InvalidInput, "a must be nonnegative");
  IwasawaSupport s;
  s.a = a;
  s.c = c;
  for (std::int64_t j = 0; j <= a; ++j) s.b_values.push_back(c - Rational(3 * a) + Rational(6 * j));
  s.k_multiplicity = static_cast<std::int64_t>(s.b_values.size());
  return s;
}

}  // namespace ghcseries::blocks

#endif  // GHCSERIES_BLOCKS_HPP
