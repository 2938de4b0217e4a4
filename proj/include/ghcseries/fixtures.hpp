#ifndef GHCSERIES_FIXTURES_HPP
#define GHCSERIES_FIXTURES_HPP

#include <cctype>
#include <string>
#include <vector>

#include "ghcseries/errors.hpp"
#include "ghcseries/parabolic.hpp"
#include "ghcseries/rational.hpp"
#include "ghcseries/rootsys.hpp"
#include "ghcseries/sl2embed.hpp"

namespace ghcseries::fixtures {

using rootsys::Family;
using rootsys::SimpleFactor;
using rootsys::Weight;

/// "C2", "A1+A1", "G2" and so on.
inline std::vector<SimpleFactor> parse_algebra(const std::string& text) {
  std::vector<SimpleFactor> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t plus = text.find('+', pos);
    std::string part = text.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    if (part.size() < 2) fail(ErrorKind::InvalidInput, "bad algebra factor '" + part + "' in '" + text + "'");
    SimpleFactor f;
    switch (std::toupper(static_cast<unsigned char>(part[0]))) {
      case 'A': f.family = Family::A; break;
      case 'B': f.family = Family::B; break;
      case 'C': f.family = Family::C; break;
      case 'D': f.family = Family::D; break;
      case 'G': f.family = Family::G; break;
      default: fail(ErrorKind::InvalidInput, "unknown family in '" + part + "'");
    }
    std::string digits = part.substr(1);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(ErrorKind::InvalidInput, "bad rank in '" + part + "'");
    if (digits.size() > 2) fail(ErrorKind::InvalidInput, "rank too large in '" + part + "'");
    f.rank = std::stoi(digits);
    out.push_back(f);
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return out;
}

/// "principal", "root:1,-1,0" or "vector:3,1".
inline sl2::Sl2Embedding parse_embedding(const rootsys::RootSystem& rs, const std::string& text) {
  if (text == "principal") return sl2::from_principal(rs);
  auto colon = text.find(':');
  if (colon == std::string::npos)
    fail(ErrorKind::InvalidInput, "embedding must be 'principal', 'root:...' or 'vector:...', got '" + text + "'");
  std::string kind = text.substr(0, colon);
  Weight w{parse_rational_list(text.substr(colon + 1))};
  if (w.dim() != rs.ambient_dim)
    fail(ErrorKind::DimensionMismatch, "embedding '" + text + "' has " + std::to_string(w.dim()) +
                                           " coordinates, the algebra needs " + std::to_string(rs.ambient_dim));
  if (kind == "root") return sl2::from_root(rs, w);
  if (kind == "vector") return sl2::from_defining_vector(rs, w);
  fail(ErrorKind::InvalidInput, "unknown embedding kind '" + kind + "'");
}

struct Fixture {
  std::string name;
  std::string algebra;
  std::string embedding;
};

inline const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> list = {
      {"sl2xsl2-diagonal", "A1+A1", "vector:1,-1,1,-1"},
      {"sl3-root", "A2", "root:1,-1,0"},
      {"sl3-principal", "A2", "principal"},
      {"sp4-long", "C2", "root:2,0"},
      {"sp4-short", "C2", "root:1,-1"},
      {"sp4-principal", "C2", "principal"},
  };
  return list;
}

inline const Fixture& find_fixture(const std::string& name) {
  for (const auto& f : all_fixtures())
    if (f.name == name) return f;
  fail(ErrorKind::InvalidInput, "unknown fixture '" + name + "'");
}

inline sl2::Sl2Embedding load_embedding(const std::string& algebra, const std::string& embedding) {
  return parse_embedding(rootsys::build_root_system(parse_algebra(algebra)), embedding);
}

inline parabolic::CompatibleParabolic load(const Fixture& f) {
  return parabolic::minimal_parabolic(load_embedding(f.algebra, f.embedding));
}

inline parabolic::CompatibleParabolic load(const std::string& name) { return load(find_fixture(name)); }

}  // namespace ghcseries::fixtures

#endif  // GHCSERIES_FIXTURES_HPP
