// ghcseries: fundamental series invariants for sl(2)-compatible parabolics.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ghcseries/charseries.hpp"
#include "ghcseries/errors.hpp"
#include "ghcseries/report.hpp"

namespace {

using namespace ghcseries;

struct Options {
  std::string fixture;
  std::string algebra;
  std::string embedding;
  std::string convention = "n";
  std::string format = "json";
  std::string kappa;
  std::optional<std::int64_t> mu;
  std::int64_t dim_e = 1;
  std::optional<int> cutoff;
  bool allow_virtual = false;
  std::int64_t a = 0;
  std::string c = "0";
};

int default_cutoff() {
  const char* env = std::getenv("GHCSERIES_CUTOFF");
  if (!env || !*env) return charseries::kDefaultCutoff;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument("bad");
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidInput, std::string("GHCSERIES_CUTOFF must be a nonnegative integer, got '") + env + "'");
  }
}

report::PairSpec pair_from(const Options& o) {
  report::PairSpec spec;
  if (!o.fixture.empty()) {
    if (!o.algebra.empty() || !o.embedding.empty())
      fail(ErrorKind::InvalidInput, "--fixture cannot be combined with --algebra/--embedding");
    spec = report::PairSpec::from_fixture(o.fixture);
  } else {
    if (o.algebra.empty() || o.embedding.empty())
      fail(ErrorKind::InvalidInput, "give either --fixture or both --algebra and --embedding");
    spec.algebra = o.algebra;
    spec.embedding = o.embedding;
  }
  spec.convention = report::parse_convention(o.convention);
  return spec;
}

std::int64_t require_mu(const Options& o) {
  if (!o.mu) fail(ErrorKind::InvalidInput, "--mu is required");
  return *o.mu;
}

void add_pair_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--fixture", o.fixture, "built-in pair: sl2xsl2-diagonal, sl3-root, sl3-principal, sp4-long, "
                                          "sp4-short, sp4-principal");
  cmd->add_option("--algebra", o.algebra, "e.g. C2, A1+A1");
  cmd->add_option("--embedding", o.embedding, "principal | root:c1,c2,... | vector:c1,c2,...");
  cmd->add_option("--lambda-convention", o.convention, "n (default) or perp");
}

void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json (default) or table");
  cmd->add_option("--cutoff", o.cutoff, "largest k-type reported (default 60, or GHCSERIES_CUTOFF)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental series invariants for sl(2)-compatible parabolics"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "invariants, thresholds and bounds of a pair");
  auto* character = app.add_subcommand("character", "t-character of N_p(E) and k-character of F^1(p, E)");
  auto* block = app.add_subcommand("block", "block table and multiplicity matrices for a central character");
  auto* socle = app.add_subcommand("socle", "k-character of R^1 Gamma(L_p(E)) in a block");
  auto* iwasawa = app.add_subcommand("iwasawa", "k-type support of the sl(3) principal series");

  for (auto* cmd : {analyze, character, block, socle}) add_pair_options(cmd, o);
  for (auto* cmd : {analyze, character, block, socle, iwasawa}) add_common_options(cmd, o);
  character->add_option("--mu", o.mu, "minimal k-type of F^1(p, E)");
  character->add_option("--dim-e", o.dim_e, "dim E (default 1)");
  character->add_flag("--allow-virtual", o.allow_virtual, "permit mu < 0 (Euler character only)");
  block->add_option("--kappa", o.kappa, "central character, e.g. 3/2,1/2")->required();
  socle->add_option("--kappa", o.kappa, "central character, e.g. 3/2,1/2")->required();
  socle->add_option("--mu", o.mu, "select the block element by its mu");
  iwasawa->add_option("--a", o.a, "a >= 0");
  iwasawa->add_option("--c", o.c, "chi(h_I), rational");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (o.format != "json" && o.format != "table")
      fail(ErrorKind::InvalidInput, "--format must be json or table");
    const int cutoff = o.cutoff ? *o.cutoff : default_cutoff();
    if (cutoff < 0) fail(ErrorKind::InvalidInput, "cutoff must be nonnegative");

    report::Json doc;
    if (analyze->parsed()) {
      doc = report::analyze(pair_from(o));
    } else if (character->parsed()) {
      doc = report::character(pair_from(o), o.mu.value_or(0), o.dim_e, cutoff, o.allow_virtual);
    } else if (block->parsed()) {
      doc = report::block(pair_from(o), o.kappa);
    } else if (socle->parsed()) {
      doc = report::socle(pair_from(o), o.kappa, require_mu(o), cutoff);
    } else {
      doc = report::iwasawa(o.a, o.c);
    }
    if (o.format == "json")
      std::cout << doc.dump(2) << '\n';
    else
      std::cout << report::render_table(doc);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: InternalError: " << e.what() << '\n';
    return 4;
  }
}
