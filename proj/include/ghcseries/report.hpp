#ifndef GHCSERIES_REPORT_HPP
#define GHCSERIES_REPORT_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghcseries/blocks.hpp"
#include "ghcseries/charseries.hpp"
#include "ghcseries/cohomology.hpp"
#include "ghcseries/errors.hpp"
#include "ghcseries/fixtures.hpp"
#include "ghcseries/parabolic.hpp"
#include "ghcseries/rational.hpp"
#include "ghcseries/rootsys.hpp"
#include "ghcseries/sl2embed.hpp"

namespace ghcseries::report {

// Insertion-ordered so output reads top-down and stays byte-stable.
using Json = nlohmann::ordered_json;

using parabolic::CompatibleParabolic;
using parabolic::LambdaConvention;

struct PairSpec {
  std::optional<std::string> fixture;
  std::string algebra;
  std::string embedding;
  LambdaConvention convention = LambdaConvention::Nilradical;

  static PairSpec from_fixture(const std::string& name) {
    const auto& f = fixtures::find_fixture(name);
    return {f.name, f.algebra, f.embedding, LambdaConvention::Nilradical};
  }

  CompatibleParabolic load() const {
    return parabolic::minimal_parabolic(fixtures::load_embedding(algebra, embedding));
  }
};

inline LambdaConvention parse_convention(const std::string& s) {
  if (s == "n") return LambdaConvention::Nilradical;
  if (s == "perp") return LambdaConvention::Perp;
  fail(ErrorKind::InvalidInput, "lambda convention must be 'n' or 'perp', got '" + s + "'");
}

inline Json rational(const Rational& q) { return to_string(q); }

inline Json weight(const rootsys::Weight& w) {
  Json out = Json::array();
  for (const auto& c : w.coords) out.push_back(rational(c));
  return out;
}

inline Json matrix(const blocks::IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

/// Dense multiplicities for delta = 0..cutoff.
inline Json k_character(const cohomology::KCharacter& ch) {
  Json out;
  out["cutoff"] = ch.cutoff;
  out["virtual"] = ch.is_virtual;
  out["multiplicities"] = ch.row();
  return out;
}

inline Json pair_header(const PairSpec& spec, const CompatibleParabolic& p) {
  Json out;
  if (spec.fixture) out["fixture"] = *spec.fixture;
  out["algebra"] = rootsys::type_string(p.embedding.rs.type_label);
  out["embedding"] = spec.embedding;
  out["h"] = weight(p.embedding.h_vector);
  out["lambda_convention"] = parabolic::to_string(spec.convention);
  return out;
}

inline Json threshold(const parabolic::Threshold& t) {
  Json out;
  out["value"] = rational(t.value);
  out["min_mu"] = t.min_mu;
  return out;
}

inline Json analyze(const PairSpec& spec) {
  auto p = spec.load();
  const auto& e = p.embedding;
  auto inv = parabolic::invariants(p);
  auto lambdas = inv.lambdas(spec.convention);
  auto bounds = parabolic::bounds_report(p);
  bool perp = spec.convention == LambdaConvention::Perp;

  Json doc;
  doc["command"] = "analyze";
  doc["pair"] = pair_header(spec, p);

  Json g;
  g["rank"] = e.rs.rank();
  g["dim"] = e.rs.dim_g();
  g["embedding_kind"] = sl2::to_string(e.kind);
  g["regular"] = sl2::is_regular(e);
  Json decomposition = Json::object();
  for (const auto& [m, c] : sl2::sl2_decomposition(sl2::t_character_of_g(e)).counts)
    decomposition["V(" + std::to_string(m) + ")"] = c;
  g["k_decomposition"] = decomposition;
  doc["g"] = g;

  Json par;
  par["n_weights"] = p.n_weights;
  par["perp_weights"] = p.perp_weights();
  par["dim_n"] = p.n_roots.size();
  par["levi_is_cartan"] = p.levi_is_cartan();
  par["s"] = p.s;
  par["r"] = p.r;
  doc["parabolic"] = par;

  Json in;
  in["rho_n"] = rational(inv.rho_n);
  in["rho"] = inv.rho;
  in["two_rho_n_perp"] = inv.two_rho_n_perp;
  in["lambda1"] = lambdas.lambda1;
  in["lambda2"] = lambdas.lambda2;
  in["lambda2_degenerate"] = lambdas.degenerate;
  in["genericity_threshold"] = rational(inv.rho_n - 1);
  in["min_generic_mu"] = parabolic::min_generic_mu(inv.rho_n);
  doc["invariants"] = in;

  Json b;
  b["weak"] = threshold(bounds.weak);
  b["socle_simple"] = threshold(perp ? bounds.socle_simple_perp : bounds.socle_simple);
  b["strong"] = threshold(perp ? bounds.strong_perp : bounds.strong);
  b["generic"] = threshold(bounds.generic);
  if (bounds.prior_work) {
    b["prior_work"] = threshold(*bounds.prior_work);
    Json r = Json::array();
    for (const auto& x : bounds.prior_work_r) r.push_back(rational(x));
    b["prior_work_r"] = r;
  }
  doc["bounds"] = b;
  return doc;
}

inline Json character(const PairSpec& spec, std::int64_t mu, std::int64_t dim_e, int cutoff, bool allow_virtual) {
  if (dim_e < 1) fail(ErrorKind::InvalidInput, "dim E must be at least 1");
  if (cutoff < 0) fail(ErrorKind::InvalidInput, "cutoff must be nonnegative");
  if (mu < 0 && !allow_virtual)
    fail(ErrorKind::InvalidInput, "mu = " + std::to_string(mu) + " < 0 needs --allow-virtual");
  auto p = spec.load();
  auto e = charseries::ModuleDatumE::from_mu(p, mu, dim_e);

  Json doc;
  doc["command"] = "character";
  doc["pair"] = pair_header(spec, p);
  doc["mu"] = mu;
  doc["omega"] = e.omega;
  doc["dim_e"] = dim_e;

  auto n = charseries::t_character_N(p, e, cutoff + 2);
  Json tn;
  tn["lowest_weight"] = mu + 2;
  tn["cutoff"] = cutoff + 2;
  Json values = Json::array();
  for (std::int64_t x = std::max<std::int64_t>(mu + 2, -cutoff - 2); x <= cutoff + 2; ++x)
    values.push_back(n.at(static_cast<int>(x)));
  tn["multiplicities_from_lowest"] = values;
  doc["t_character_N"] = tn;

  doc["euler_k_character"] = k_character(charseries::euler_k_character(n, cutoff));
  if (mu >= 0) {
    doc["f1_k_character"] = k_character(charseries::f1_k_character(p, e, cutoff));
    doc["regime"] = cohomology::to_string(cohomology::prop52_regime(p, mu, spec.convention));
  } else {
    doc["regime"] = "virtual";
  }
  return doc;
}

inline Json block_table(const std::vector<blocks::BlockElement>& elements, const blocks::MultiplicityMatrix* mm) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& b = elements[i];
    Json row;
    row["index"] = i;
    row["w_length"] = b.w.length;
    row["nu"] = weight(b.nu);
    row["omega"] = b.omega;
    row["mu"] = b.mu;
    row["dim_e"] = b.dim_e;
    if (mm) row["linkage_class"] = mm->linkage_class[i];
    rows.push_back(row);
  }
  return rows;
}

inline Json central(const blocks::CentralCharacter& cc) {
  Json out;
  out["representative"] = weight(cc.representative);
  out["regular"] = cc.regular;
  out["integral"] = cc.integral;
  return out;
}

inline rootsys::Weight parse_kappa(const std::string& text, const CompatibleParabolic& p) {
  rootsys::Weight k{parse_rational_list(text)};
  if (k.dim() != p.embedding.rs.ambient_dim)
    fail(ErrorKind::DimensionMismatch, "kappa has " + std::to_string(k.dim()) + " coordinates, the algebra needs " +
                                           std::to_string(p.embedding.rs.ambient_dim));
  return k;
}

inline Json block(const PairSpec& spec, const std::string& kappa_text) {
  auto p = spec.load();
  auto cc = blocks::central_character_of_kappa(parse_kappa(kappa_text, p), p.embedding.rs);
  auto mm = blocks::multiplicity_matrix(cc, p);
  Json doc;
  doc["command"] = "block";
  doc["pair"] = pair_header(spec, p);
  doc["kappa"] = kappa_text;
  doc["central_character"] = central(cc);
  doc["elements"] = block_table(mm.elements, &mm);
  doc["m"] = matrix(mm.m);
  doc["p"] = matrix(mm.p);
  return doc;
}

inline Json socle(const PairSpec& spec, const std::string& kappa_text, std::int64_t mu, int cutoff) {
  auto p = spec.load();
  auto cc = blocks::central_character_of_kappa(parse_kappa(kappa_text, p), p.embedding.rs);
  auto mm = blocks::multiplicity_matrix(cc, p);
  std::size_t idx = mm.index_of_mu(mu);
  auto s = blocks::socle_k_character(p, mm, idx, cutoff, spec.convention);
  auto flags = blocks::reconstructibility_report(p, mu, spec.convention);

  Json doc;
  doc["command"] = "socle";
  doc["pair"] = pair_header(spec, p);
  doc["kappa"] = kappa_text;
  doc["mu"] = mu;
  doc["element"] = block_table({mm.elements[idx]}, nullptr)[0];
  Json coeffs = Json::array();
  for (std::size_t d = 0; d < mm.size(); ++d)
    if (mm.p[idx][d]) {
      Json c;
      c["mu"] = mm.elements[d].mu;
      c["p"] = mm.p[idx][d];
      coeffs.push_back(c);
    }
  doc["p_row"] = coeffs;
  doc["regime"] = s.is_socle ? "socle" : "character_of_R1Gamma_L";
  doc["k_character"] = k_character(s.character);
  Json f;
  f["f0_f2_vanish"] = flags.f0_f2_vanish;
  f["socle_simple"] = flags.socle_simple;
  f["strong_bijection"] = flags.strong_bijection;
  f["generic"] = flags.generic;
  f["regular_k"] = flags.regular_k;
  doc["reconstructibility"] = f;
  return doc;
}

inline Json iwasawa(std::int64_t a, const std::string& c_text) {
  auto s = blocks::iwasawa_sl3_support(a, parse_rational(c_text));
  Json doc;
  doc["command"] = "iwasawa";
  doc["a"] = a;
  doc["c"] = rational(s.c);
  Json b = Json::array();
  for (const auto& x : s.b_values) b.push_back(rational(x));
  doc["b_values"] = b;
  doc["k_multiplicity"] = s.k_multiplicity;
  return doc;
}

namespace detail {

inline std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline bool is_matrix(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v)
    if (!row.is_array()) return false;
  return true;
}

inline bool is_record_list(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v)
    if (!row.is_object()) return false;
  return true;
}

inline void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out,
                    std::vector<std::pair<std::string, const Json*>>& tables) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out, tables);
  } else if (is_matrix(v) || is_record_list(v)) {
    tables.emplace_back(prefix, &v);
  } else if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + scalar_text(x);
    out.emplace_back(prefix, s);
  } else {
    out.emplace_back(prefix, scalar_text(v));
  }
}

inline std::string cell_text(const Json& v) {
  if (v.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + ")";
  }
  return scalar_text(v);
}

inline void render_grid(std::ostream& os, const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (width.size() <= j) width.push_back(0);
      width[j] = std::max(width[j], row[j].size());
    }
  for (const auto& row : cells) {
    os << " ";
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << ' ' << std::string(width[j] - row[j].size(), ' ') << row[j];
    }
    os << '\n';
  }
}

}  // namespace detail

/// Aligned plain-text rendering of a report document.
inline std::string render_table(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> lines;
  std::vector<std::pair<std::string, const Json*>> tables;
  detail::flatten(doc, "", lines, tables);
  std::size_t w = 0;
  for (const auto& [k, v] : lines) w = std::max(w, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : lines) os << k << std::string(w - k.size(), ' ') << "  " << v << '\n';
  for (const auto& [name, t] : tables) {
    os << '\n' << name << ":\n";
    std::vector<std::vector<std::string>> cells;
    if (detail::is_record_list(*t)) {
      std::vector<std::string> header;
      for (const auto& [k, v] : (*t)[0].items()) header.push_back(k);
      cells.push_back(header);
      for (const auto& row : *t) {
        std::vector<std::string> r;
        for (const auto& k : header) r.push_back(row.contains(k) ? detail::cell_text(row[k]) : "");
        cells.push_back(r);
      }
    } else {
      for (const auto& row : *t) {
        std::vector<std::string> r;
        for (const auto& x : row) r.push_back(detail::scalar_text(x));
        cells.push_back(r);
      }
    }
    detail::render_grid(os, cells);
  }
  return os.str();
}

}  // namespace ghcseries::report

#endif  // GHCSERIES_REPORT_HPP
