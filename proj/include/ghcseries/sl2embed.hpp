#ifndef GHCSERIES_SL2EMBED_HPP
#define GHCSERIES_SL2EMBED_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ghcseries/errors.hpp"
#include "ghcseries/rational.hpp"
#include "ghcseries/rootsys.hpp"

namespace ghcseries::sl2 {

using rootsys::RootSystem;
using rootsys::Weight;

/// Finite multiset of integer t-weights.
struct FiniteTCharacter {
  std::map<int, std::int64_t> mults;

  std::int64_t at(int weight) const {
    auto it = mults.find(weight);
    return it == mults.end() ? 0 : it->second;
  }

  std::int64_t total() const {
    std::int64_t sum = 0;
    for (const auto& [w, m] : mults) sum += m;
    return sum;
  }

  bool is_symmetric() const {
    for (const auto& [w, m] : mults)
      if (at(-w) != m) return false;
    return true;
  }

  friend bool operator==(const FiniteTCharacter&, const FiniteTCharacter&) = default;
};

/// g (or any integrable finite-dimensional module) as a sum of V(m)'s.
struct Sl2Decomposition {
  std::map<int, std::int64_t> counts;

  std::int64_t count(int m) const {
    auto it = counts.find(m);
    return it == counts.end() ? 0 : it->second;
  }

  std::int64_t dimension() const {
    std::int64_t sum = 0;
    for (const auto& [m, c] : counts) sum += c * (m + 1);
    return sum;
  }

  /// Weights m, m-2, ..., -m of each summand.
  FiniteTCharacter expand() const {
    FiniteTCharacter ch;
    for (const auto& [m, c] : counts)
      for (int w = -m; w <= m; w += 2) ch.mults[w] += c;
    return ch;
  }
};

inline Sl2Decomposition sl2_decomposition(const FiniteTCharacter& ch) {
  if (!ch.is_symmetric()) fail(ErrorKind::NotIntegrable, "t-character is not symmetric under w -> -w");
  Sl2Decomposition out;
  const int top = ch.mults.empty() ? 0 : ch.mults.rbegin()->first;
  // Walk every weight, not only the stored ones, so gaps are caught.
  for (int w = 0; w <= top; ++w) {
    std::int64_t c = ch.at(w) - ch.at(w + 2);
    if (c < 0)
      fail(ErrorKind::NotIntegrable, "weight " + std::to_string(w) + " has smaller multiplicity than weight " +
                                         std::to_string(w + 2));
    if (c > 0) out.counts[w] = c;
  }
  return out;
}

enum class EmbeddingKind { Principal, Root, Explicit };

inline const char* to_string(EmbeddingKind k) {
  switch (k) {
    case EmbeddingKind::Principal: return "principal";
    case EmbeddingKind::Root: return "root";
    case EmbeddingKind::Explicit: return "explicit";
  }
  return "?";
}

/// An sl(2)-subalgebra k of g, recorded by its semisimple element h as a
/// vector in the span of the roots: alpha(h) = <alpha, h_vector>. The root
/// system carried here has its positive roots re-derived from h, so its
/// Borel lies in the compatible parabolic.
struct Sl2Embedding {
  RootSystem rs;
  Weight h_vector;
  EmbeddingKind kind = EmbeddingKind::Explicit;
  Weight beta;  // set for root embeddings

  int eval(const Weight& alpha) const { return static_cast<int>(to_integer(rootsys::inner_product(alpha, h_vector))); }
};

inline FiniteTCharacter t_character_of_g(const Sl2Embedding& e) {
  FiniteTCharacter ch;
  for (const auto& a : e.rs.roots) ch.mults[e.eval(a)] += 1;
  ch.mults[0] += static_cast<std::int64_t>(e.rs.rank());
  return ch;
}

inline Sl2Embedding from_defining_vector(const RootSystem& rs, const Weight& h,
                                         EmbeddingKind kind = EmbeddingKind::Explicit) {
  rootsys::require_same_dim(h, Weight::zero(rs.ambient_dim));
  for (const auto& a : rs.roots)
    if (!is_integer(rootsys::inner_product(a, h)))
      fail(ErrorKind::NonIntegralGrading, "root " + rootsys::to_string(a) + " takes non-integral value " +
                                              ghcseries::to_string(rootsys::inner_product(a, h)));
  // Project onto the span of the roots so equal functionals give equal vectors.
  std::vector<Rational> values;
  for (const auto& a : rs.simple_roots) values.push_back(rootsys::inner_product(a, h));
  Weight projected = rootsys::solve_in_span(rs.simple_roots, values);

  Sl2Embedding e;
  e.rs = rootsys::with_positivity(rs, projected);
  e.h_vector = projected;
  e.kind = kind;
  auto ch = t_character_of_g(e);
  sl2_decomposition(ch);
  if (ch.at(2) < 1) fail(ErrorKind::NoSl2Triple, "no root space of t-weight 2, so no e with [h,e] = 2e");
  return e;
}

/// h determined by alpha_i(h) = 2 on every simple root.
inline Sl2Embedding from_principal(const RootSystem& rs) {
  std::vector<Rational> twos(rs.simple_roots.size(), Rational(2));
  return from_defining_vector(rs, rootsys::solve_in_span(rs.simple_roots, twos), EmbeddingKind::Principal);
}

/// h is the coroot of beta.
inline Sl2Embedding from_root(const RootSystem& rs, const Weight& beta) {
  rootsys::require_same_dim(beta, Weight::zero(rs.ambient_dim));
  if (!rs.is_root(beta)) fail(ErrorKind::NotARoot, rootsys::to_string(beta) + " is not a root");
  auto e = from_defining_vector(rs, rootsys::coroot(beta), EmbeddingKind::Root);
  e.beta = beta;
  return e;
}

/// No root vanishes on h, i.e. the centralizer of t is a Cartan subalgebra.
inline bool is_regular(const Sl2Embedding& e) {
  for (const auto& a : e.rs.roots)
    if (e.eval(a) == 0) return false;
  return true;
}

}  // namespace ghcseries::sl2

#endif  // GHCSERIES_SL2EMBED_HPP
