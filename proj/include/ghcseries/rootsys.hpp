#ifndef GHCSERIES_ROOTSYS_HPP
#define GHCSERIES_ROOTSYS_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ghcseries/errors.hpp"
#include "ghcseries/rational.hpp"

namespace ghcseries::rootsys {

/*
  Root systems of types A, B, C, D, G2 and their direct sums, realized in the
  standard epsilon basis with <e_i, e_j> = delta_ij. Type A_n lives in the
  sum-zero hyperplane of an (n+1)-dimensional ambient space; G2 likewise in
  a 3-dimensional one. A direct sum concatenates the ambient coordinates.

  Everything is exact. Weyl group elements are stored as rational matrices.
*/

enum class Family { A, B, C, D, G };

struct SimpleFactor {
  Family family;
  int rank;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::G: return 'G';
  }
  return '?';
}

inline std::string type_string(const std::vector<SimpleFactor>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "+";
    out += family_letter(factors[i].family);
    out += std::to_string(factors[i].rank);
  }
  return out;
}

struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
  static Weight zero(std::size_t dim) { return Weight(std::vector<Rational>(dim, Rational(0))); }

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == Rational(0); });
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  /// Lexicographic on coordinates.
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

inline void require_same_dim(const Weight& a, const Weight& b) {
  if (a.dim() != b.dim())
    fail(ErrorKind::DimensionMismatch,
         "weights of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
}

inline Weight operator+(const Weight& a, const Weight& b) {
  require_same_dim(a, b);
  Weight out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] += b[i];
  return out;
}

inline Weight operator-(const Weight& a, const Weight& b) {
  require_same_dim(a, b);
  Weight out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] -= b[i];
  return out;
}

inline Weight operator-(const Weight& a) {
  Weight out = a;
  for (auto& c : out.coords) c = -c;
  return out;
}

inline Weight operator*(const Rational& s, const Weight& a) {
  Weight out = a;
  for (auto& c : out.coords) c *= s;
  return out;
}

inline Rational inner_product(const Weight& a, const Weight& b) {
  require_same_dim(a, b);
  Rational sum(0);
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

/// 2 alpha / <alpha, alpha>.
inline Weight coroot(const Weight& alpha) { return (Rational(2) / inner_product(alpha, alpha)) * alpha; }

/// <x, alpha^vee>.
inline Rational coroot_pairing(const Weight& x, const Weight& alpha) {
  return Rational(2) * inner_product(x, alpha) / inner_product(alpha, alpha);
}

inline std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.dim(); ++i) {
    if (i) out += ", ";
    out += ghcseries::to_string(w[i]);
  }
  return out + ")";
}

/// Positivity of a root: sign of <alpha, h>, ties broken by the sign of the
/// first nonzero coordinate. Both pieces are additive, so this is a total
/// order on the root lattice compatible with addition.
inline bool is_positive_wrt(const Weight& alpha, const Weight& h) {
  if (!h.coords.empty()) {
    Rational v = inner_product(alpha, h);
    if (v != Rational(0)) return v > Rational(0);
  }
  for (const auto& c : alpha.coords)
    if (c != Rational(0)) return c > Rational(0);
  return false;
}

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix identity_matrix(std::size_t dim) {
  Matrix m(dim, std::vector<Rational>(dim, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  Matrix out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == Rational(0)) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

inline Weight apply(const Matrix& m, const Weight& x) {
  if (m.size() != x.dim())
    fail(ErrorKind::DimensionMismatch, "matrix of size " + std::to_string(m.size()) + " applied to weight of dimension " +
                                           std::to_string(x.dim()));
  Weight out = Weight::zero(x.dim());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i] += m[i][j] * x[j];
  return out;
}

/// x -> x - <x, alpha^vee> alpha.
inline Matrix reflection_matrix(const Weight& alpha) {
  Weight check = coroot(alpha);
  Matrix m = identity_matrix(alpha.dim());
  for (std::size_t i = 0; i < alpha.dim(); ++i)
    for (std::size_t j = 0; j < alpha.dim(); ++j) m[i][j] -= alpha[i] * check[j];
  return m;
}

inline Weight reflect(const Weight& x, const Weight& alpha) { return x - coroot_pairing(x, alpha) * alpha; }

struct RootSystem {
  std::vector<SimpleFactor> type_label;
  std::size_t ambient_dim = 0;
  std::vector<Weight> roots;
  std::vector<Weight> simple_roots;
  std::vector<Weight> positive_roots;
  Weight rho_tilde;
  /// Empty unless positivity was re-derived from a defining vector.
  Weight positivity_vector;

  std::size_t rank() const { return simple_roots.size(); }
  std::size_t dim_g() const { return roots.size() + rank(); }

  bool is_root(const Weight& w) const { return std::find(roots.begin(), roots.end(), w) != roots.end(); }
  bool is_positive(const Weight& w) const {
    return std::find(positive_roots.begin(), positive_roots.end(), w) != positive_roots.end();
  }
};

/// Simple system of a reflection-closed positive system: alpha is simple iff
/// s_alpha moves no other positive root out of the positive set.
inline std::vector<Weight> simple_system(const std::vector<Weight>& positives) {
  std::set<Weight> positive_set(positives.begin(), positives.end());
  std::vector<Weight> simple;
  for (const auto& alpha : positives) {
    int flipped = 0;
    for (const auto& beta : positives)
      if (!positive_set.count(reflect(beta, alpha))) ++flipped;
    if (flipped == 1) simple.push_back(alpha);
  }
  return simple;
}

namespace detail {

inline Weight unit(std::size_t dim, std::size_t i, Rational scale = Rational(1)) {
  Weight w = Weight::zero(dim);
  w[i] = scale;
  return w;
}

/// Roots of one simple factor in its own coordinates.
inline std::vector<Weight> factor_roots(const SimpleFactor& f, std::size_t& dim) {
  std::vector<Weight> roots;
  const int n = f.rank;
  auto e = [&](std::size_t i) { return unit(dim, i); };
  auto add_pm = [&](const Weight& w) {
    roots.push_back(w);
    roots.push_back(-w);
  };
  switch (f.family) {
    case Family::A:
      if (n < 1) break;
      dim = static_cast<std::size_t>(n) + 1;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) add_pm(e(i) - e(j));
      break;
    case Family::B:
    case Family::C:
      if (n < 1) break;
      dim = static_cast<std::size_t>(n);
      for (std::size_t i = 0; i < dim; ++i) {
        add_pm(f.family == Family::B ? e(i) : Rational(2) * e(i));
        for (std::size_t j = i + 1; j < dim; ++j) {
          add_pm(e(i) - e(j));
          add_pm(e(i) + e(j));
        }
      }
      break;
    case Family::D:
      if (n < 2) break;
      dim = static_cast<std::size_t>(n);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
          add_pm(e(i) - e(j));
          add_pm(e(i) + e(j));
        }
      break;
    case Family::G:
      if (n != 2) break;
      dim = 3;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) add_pm(e(i) - e(j));
      for (std::size_t i = 0; i < 3; ++i) {
        Weight w = Rational(3) * e(i) - (e(0) + e(1) + e(2));
        add_pm(w);
      }
      break;
  }
  return roots;
}

}  // namespace detail

/// Re-derives positive roots, simple roots and rho_tilde from the order
/// "sign of <alpha, h>, then lexicographic". An empty h gives the default
/// lexicographic order.
inline RootSystem with_positivity(RootSystem rs, const Weight& h) {
  if (!h.coords.empty()) require_same_dim(h, Weight::zero(rs.ambient_dim));
  rs.positivity_vector = h;
  rs.positive_roots.clear();
  for (const auto& a : rs.roots)
    if (is_positive_wrt(a, h)) rs.positive_roots.push_back(a);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());
  rs.simple_roots = simple_system(rs.positive_roots);
  rs.rho_tilde = Weight::zero(rs.ambient_dim);
  for (const auto& a : rs.positive_roots) rs.rho_tilde = rs.rho_tilde + a;
  rs.rho_tilde = Rational(1, 2) * rs.rho_tilde;
  return rs;
}

inline RootSystem build_root_system(const std::vector<SimpleFactor>& spec, int max_rank = 4) {
  if (spec.empty()) fail(ErrorKind::UnsupportedAlgebra, "empty algebra specification");
  int total_rank = 0;
  std::vector<std::vector<Weight>> blocks;
  std::vector<std::size_t> dims;
  for (const auto& f : spec) {
    std::size_t dim = 0;
    auto roots = detail::factor_roots(f, dim);
    if (roots.empty())
      fail(ErrorKind::UnsupportedAlgebra, std::string("unsupported simple factor ") + family_letter(f.family) +
                                              std::to_string(f.rank));
    total_rank += f.rank;
    blocks.push_back(std::move(roots));
    dims.push_back(dim);
  }
  if (total_rank > max_rank)
    fail(ErrorKind::UnsupportedAlgebra,
         "total rank " + std::to_string(total_rank) + " exceeds ceiling " + std::to_string(max_rank));

  RootSystem rs;
  rs.type_label = spec;
  for (auto d : dims) rs.ambient_dim += d;
  std::size_t offset = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto& r : blocks[b]) {
      Weight w = Weight::zero(rs.ambient_dim);
      for (std::size_t i = 0; i < r.dim(); ++i) w[offset + i] = r[i];
      rs.roots.push_back(w);
    }
    offset += dims[b];
  }
  std::sort(rs.roots.begin(), rs.roots.end());
  return with_positivity(std::move(rs), Weight{});
}

struct WeylElement {
  Matrix matrix;
  int length = 0;

  Weight operator()(const Weight& x) const { return apply(matrix, x); }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

/// A finite reflection group given by a reflection-closed set of roots and a
/// positive system. Used both for the full Weyl group and for reflection
/// subgroups such as the integral Weyl group of a weight.
class WeylGroup {
 public:
  WeylGroup(std::vector<Weight> positive_roots, std::size_t ambient_dim)
      : positive_(std::move(positive_roots)), dim_(ambient_dim) {
    std::sort(positive_.begin(), positive_.end());
    positive_set_.insert(positive_.begin(), positive_.end());
    simple_ = simple_system(positive_);
    enumerate();
    find_components();
  }

  std::size_t size() const { return elements_.size(); }
  std::size_t ambient_dim() const { return dim_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  const WeylElement& identity() const { return elements_.front(); }
  std::size_t rank() const { return simple_.size(); }
  /// Simple-root index sets of the irreducible components.
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }

  bool contains(const WeylElement& x) const { return index_.count(x.matrix) > 0; }

  std::size_t index_of(const Matrix& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) fail(ErrorKind::GroupMismatch, "element does not belong to this Weyl group");
    return it->second;
  }

  /// Number of positive roots sent to negative roots.
  int length(const Matrix& m) const {
    int count = 0;
    for (const auto& a : positive_)
      if (!positive_set_.count(apply(m, a))) ++count;
    return count;
  }

  WeylElement simple_reflection(std::size_t i) const { return elements_[index_of(reflection_matrix(simple_.at(i)))]; }

  WeylElement element_for(const Matrix& m) const { return elements_[index_of(m)]; }

  /// Bruhat order. Components of rank <= 2 use the dihedral rule
  /// (x = y or l(x) < l(y)) factor by factor; otherwise the order is the
  /// transitive closure of x < t x for reflections t raising length.
  bool bruhat_leq(const WeylElement& x, const WeylElement& y) const {
    index_of(x.matrix);
    index_of(y.matrix);
    bool all_small = std::all_of(components_.begin(), components_.end(),
                                 [](const auto& c) { return c.size() <= 2; });
    return all_small ? dihedral_leq(x, y) : chain_leq(x, y);
  }

  /// Reference implementation of the Bruhat order via reflection chains,
  /// valid for every finite reflection group.
  bool chain_leq(const WeylElement& x, const WeylElement& y) const {
    if (x == y) return true;
    if (x.length >= y.length) return false;
    std::vector<Matrix> reflections;
    for (const auto& a : positive_) reflections.push_back(reflection_matrix(a));
    std::set<Matrix> seen{x.matrix};
    std::deque<Matrix> queue{x.matrix};
    while (!queue.empty()) {
      Matrix z = queue.front();
      queue.pop_front();
      int lz = length(z);
      for (const auto& t : reflections) {
        Matrix tz = multiply(t, z);
        int l = length(tz);
        if (l <= lz || l > y.length || seen.count(tz)) continue;
        if (tz == y.matrix) return true;
        seen.insert(tz);
        queue.push_back(tz);
      }
    }
    return false;
  }

 private:
  bool dihedral_leq(const WeylElement& x, const WeylElement& y) const {
    for (const auto& comp : components_) {
      bool equal = true;
      for (auto i : comp)
        if (x(simple_[i]) != y(simple_[i])) equal = false;
      if (equal) continue;
      if (component_length(x, comp) >= component_length(y, comp)) return false;
    }
    return true;
  }

  int component_length(const WeylElement& w, const std::vector<std::size_t>& comp) const {
    int count = 0;
    for (const auto& a : positive_) {
      if (!in_component_span(a, comp)) continue;
      if (!positive_set_.count(w(a))) ++count;
    }
    return count;
  }

  bool in_component_span(const Weight& a, const std::vector<std::size_t>& comp) const {
    // Components are mutually orthogonal, so a root lies in the span of the
    // component it is not orthogonal to.
    for (auto i : comp)
      if (inner_product(a, simple_[i]) != Rational(0)) return true;
    return false;
  }

  void enumerate() {
    std::vector<Matrix> gens;
    for (const auto& a : simple_) gens.push_back(reflection_matrix(a));
    Matrix id = identity_matrix(dim_);
    elements_.push_back({id, 0});
    index_[id] = 0;
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      for (const auto& g : gens) {
        Matrix m = multiply(g, elements_[head].matrix);
        if (index_.count(m)) continue;
        index_[m] = elements_.size();
        elements_.push_back({m, length(m)});
      }
    }
  }

  void find_components() {
    std::vector<int> comp(simple_.size(), -1);
    int next = 0;
    for (std::size_t s = 0; s < simple_.size(); ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = next;
      std::vector<std::size_t> members;
      while (!stack.empty()) {
        auto i = stack.back();
        stack.pop_back();
        members.push_back(i);
        for (std::size_t j = 0; j < simple_.size(); ++j)
          if (comp[j] < 0 && inner_product(simple_[i], simple_[j]) != Rational(0)) {
            comp[j] = next;
            stack.push_back(j);
          }
      }
      std::sort(members.begin(), members.end());
      components_.push_back(members);
      ++next;
    }
  }

  std::vector<Weight> positive_;
  std::set<Weight> positive_set_;
  std::vector<Weight> simple_;
  std::size_t dim_;
  std::vector<WeylElement> elements_;
  std::map<Matrix, std::size_t> index_;
  std::vector<std::vector<std::size_t>> components_;
};

inline WeylGroup weyl_group(const RootSystem& rs) { return WeylGroup(rs.positive_roots, rs.ambient_dim); }

inline bool bruhat_leq(const WeylElement& x, const WeylElement& y, const WeylGroup& group) {
  return group.bruhat_leq(x, y);
}

/// All pairs (w, w(kappa)), one per group element, in group enumeration order.
inline std::vector<std::pair<WeylElement, Weight>> dot_orbit(const Weight& kappa, const WeylGroup& group) {
  std::vector<std::pair<WeylElement, Weight>> out;
  out.reserve(group.size());
  for (const auto& w : group.elements()) out.emplace_back(w, w(kappa));
  return out;
}

inline std::vector<std::pair<WeylElement, Weight>> dot_orbit(const Weight& kappa, const RootSystem& rs) {
  return dot_orbit(kappa, weyl_group(rs));
}

/// Distinct points of the W-orbit of kappa, sorted lexicographically.
inline std::vector<Weight> orbit_points(const Weight& kappa, const WeylGroup& group) {
  std::set<Weight> pts;
  for (const auto& w : group.elements()) pts.insert(w(kappa));
  return {pts.begin(), pts.end()};
}

inline std::size_t stabilizer_size(const Weight& kappa, const WeylGroup& group) {
  std::size_t count = 0;
  for (const auto& w : group.elements())
    if (w(kappa) == kappa) ++count;
  return count;
}

/// Solves sum_j c_j <a_i, a_j> = rhs_i exactly by Gauss-Jordan elimination
/// on the Gram matrix of a linearly independent family.
inline std::vector<Rational> gram_solve(const std::vector<Weight>& basis, const std::vector<Rational>& rhs) {
  const std::size_t n = basis.size();
  if (rhs.size() != n) fail(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = inner_product(basis[i], basis[j]);
    a[i][n] = rhs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == Rational(0)) ++pivot;
    if (pivot == n) fail(ErrorKind::InternalError, "singular Gram matrix");
    std::swap(a[pivot], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rational(0)) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][n] / a[i][i];
  return out;
}

/// The vector v in the span of basis with <a_i, v> = rhs_i.
inline Weight solve_in_span(const std::vector<Weight>& basis, const std::vector<Rational>& rhs) {
  auto c = gram_solve(basis, rhs);
  Weight out = Weight::zero(basis.empty() ? 0 : basis[0].dim());
  for (std::size_t i = 0; i < basis.size(); ++i) out = out + c[i] * basis[i];
  return out;
}

/// Coefficients of x in the basis of simple roots (x must lie in their span).
inline std::vector<Rational> simple_root_coordinates(const Weight& x, const std::vector<Weight>& simple) {
  std::vector<Rational> rhs;
  for (const auto& a : simple) rhs.push_back(inner_product(a, x));
  return gram_solve(simple, rhs);
}

}  // namespace ghcseries::rootsys

#endif  // GHCSERIES_ROOTSYS_HPP
