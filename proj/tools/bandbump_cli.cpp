// bandbump: exact stopping-time and outcome distributions of the Band-or-Bump game.
//
//   bandbump dist    -m 4 -s 13 -l 5 -u 8 [--digits 6] [--format csv|json]
//   bandbump verify  -m 2 -s 3 -l 1 -u 2 [--oracle-cap 16] [--mc-trials N --seed S]
//   bandbump scan    nonvacuity|bump-logconcavity|band-logconcavity [--m-max 8 --s-max 8] [--out F]
//   bandbump payoff  -m 13 -s 4 -l 1 -u 3 --band -3 --bump 2
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "bandbump/analysis.hpp"
#include "bandbump/engine.hpp"
#include "bandbump/oracle.hpp"
#include "bandbump/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

using namespace bandbump;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void add_params(CLI::App* cmd, GameParams& p) {
  cmd->add_option("-m", p.m, "number of ranks")->required();
  cmd->add_option("-s", p.s, "cards per rank")->required();
  cmd->add_option("-l", p.l, "lower quota")->required();
  cmd->add_option("-u", p.u, "upper quota")->required();
}

int run_dist(const GameParams& params, int digits, const std::string& format) {
  const JointDistribution dist = joint_distribution(params);
  if (format == "json") {
    std::cout << distribution_json(dist, digits).dump(2) << "\n";
  } else {
    std::cout << render_csv(build_table(dist, digits));
  }
  return 0;
}

struct VerifyOptions {
  int oracle_cap = oracle::kDefaultDeckCap;
  long mc_trials = 0;
  std::uint64_t seed = 1;
  double z_threshold = 4.0;
  double min_probability = 1e-5;
};

void print_leg(const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS " : "FAIL ") << name;
  if (!detail.empty()) std::cout << ": " << detail;
  std::cout << "\n";
}

int run_verify(const GameParams& params, const VerifyOptions& opt) {
  bool ok = true;
  std::cout << "verify " << params.describe() << "\n";

  // Building the distribution runs every internal cross-check of the formulas.
  JointDistribution dist(params);
  try {
    dist = joint_distribution(params);
    print_leg("identities", true, "all cross-checks agree");
  } catch (const std::logic_error& e) {
    print_leg("identities", false, e.what());
    return kExitFailure;
  }

  const bool unit_mass = dist.total_mass() == 1;
  print_leg("total-mass", unit_mass, "sum = " + to_fraction_string(dist.total_mass()));
  ok = ok && unit_mass;

  if (params.t() <= opt.oracle_cap) {
    const JointDistribution truth = oracle::exhaustive_distribution(params, opt.oracle_cap);
    const auto diff = first_mismatch(dist, truth);
    if (diff) {
      const int n = *diff;
      print_leg("exhaustive", false,
                "n=" + std::to_string(n) + " formula (" +
                    to_fraction_string(dist.mass(n, Outcome::Band)) + ", " +
                    to_fraction_string(dist.mass(n, Outcome::Bump)) + ") vs oracle (" +
                    to_fraction_string(truth.mass(n, Outcome::Band)) + ", " +
                    to_fraction_string(truth.mass(n, Outcome::Bump)) + ")");
      ok = false;
    } else {
      print_leg("exhaustive", true, "exact agreement on " + std::to_string(truth.rows().size()) +
                                        " rows");
    }
  } else {
    std::cout << "SKIP exhaustive: deck of " << params.t() << " cards exceeds --oracle-cap "
              << opt.oracle_cap << "\n";
  }

  if (params == GameParams{13, 4, 1, 3}) {
    bool same = true;
    for (int n = params.u + 1; n <= params.n_max(); ++n) {
      same = same && book_or_band_bump_joint(n) == dist.mass(n, Outcome::Bump);
    }
    print_leg("specialised-bump", same, "13-rank closed form vs general form");
    ok = ok && same;
  }

  if (opt.mc_trials > 0) {
    const auto emp = oracle::simulate(params, opt.mc_trials, opt.seed);
    const auto cmp = oracle::compare(
        dist, emp, oracle::ComparisonOptions{opt.z_threshold, opt.min_probability});
    char buf[128];
    std::snprintf(buf, sizeof buf, "%ld trials, seed %llu, max |z| = %.3f (threshold %.1f)",
                  opt.mc_trials, static_cast<unsigned long long>(opt.seed), cmp.max_abs_z,
                  cmp.z_threshold);
    std::string detail = buf;
    if (cmp.impossible_observations > 0) {
      detail += ", " + std::to_string(cmp.impossible_observations) + " impossible observations";
    }
    print_leg("monte-carlo", cmp.passed, detail);
    ok = ok && cmp.passed;
  }

  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : kExitFailure;
}

int run_scan(const std::string& kind, const ScanGrid& grid, std::string out) {
  ScanReport report;
  if (kind == "nonvacuity") {
    report = nonvacuity_scan(grid);
  } else if (kind == "bump-logconcavity") {
    report = bump_logconcavity_scan(grid);
  } else {
    report = band_logconcavity_scan(grid);
  }
  if (out.empty()) out = "scan-" + kind + ".json";
  std::ofstream file(out);
  if (!file) {
    std::cerr << "cannot write " << out << "\n";
    return kExitUsage;
  }
  file << scan_json(report).dump(2) << "\n";

  std::cout << report.kind << ": " << report.cells.size() << " cells, " << report.total_checks()
            << " checks, " << report.counterexamples.size()
            << (kind == "nonvacuity" ? " counterexamples" : " findings") << " -> " << out
            << "\n";
  // Log-concavity violations are findings about an open conjecture, not failures.
  return kind == "nonvacuity" && !report.clean() ? kExitFailure : 0;
}

int run_payoff(const GameParams& params, const std::string& band, const std::string& bump,
               int digits) {
  const PayoffSpec spec{parse_exact(band), parse_exact(bump)};
  const ExactRational ev = payoff_ev(joint_distribution(params), spec);
  std::cout << "expected payoff " << to_decimal(ev, digits) << " (exact " << to_fraction_string(ev)
            << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stopping-time and outcome distributions for the Band-or-Bump game"};
  app.require_subcommand(1);

  GameParams params;
  int digits = 6;
  std::string format = "csv";

  auto* dist = app.add_subcommand("dist", "print the joint distribution of N and the outcome");
  add_params(dist, params);
  dist->add_option("--digits", digits, "significant figures")->check(CLI::PositiveNumber);
  dist->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "check the formulas against independent oracles");
  add_params(verify, params);
  verify->add_option("--oracle-cap", vopt.oracle_cap, "largest deck for the exhaustive oracle");
  verify->add_option("--mc-trials", vopt.mc_trials, "Monte Carlo trials (0 skips)");
  verify->add_option("--seed", vopt.seed, "Monte Carlo seed");
  verify->add_option("--z-threshold", vopt.z_threshold, "largest tolerated |z|");
  verify->add_option("--min-prob", vopt.min_probability,
                     "cells below this exact probability are not gated");

  std::string kind;
  ScanGrid grid;
  std::string out;
  int l_pin = -1, u_pin = -1;
  auto* scan = app.add_subcommand("scan", "scan a parameter grid");
  scan->add_option("kind", kind, "nonvacuity, bump-logconcavity or band-logconcavity")
      ->required()
      ->check(CLI::IsMember({"nonvacuity", "bump-logconcavity", "band-logconcavity"}));
  scan->add_option("--m-min", grid.m_min);
  scan->add_option("--m-max", grid.m_max);
  scan->add_option("--s-min", grid.s_min);
  scan->add_option("--s-max", grid.s_max);
  scan->add_option("-l", l_pin, "restrict to one lower quota");
  scan->add_option("-u", u_pin, "restrict to one upper quota");
  scan->add_option("--out", out, "report path (default scan-<kind>.json)");

  std::string band_pay = "0", bump_pay = "0";
  auto* payoff = app.add_subcommand("payoff", "expected payoff per game");
  add_params(payoff, params);
  payoff->add_option("--band", band_pay, "payoff when the game ends in a band");
  payoff->add_option("--bump", bump_pay, "payoff when the game ends in a bump");
  payoff->add_option("--digits", digits)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*dist) return run_dist(params, digits, format);
    if (*verify) return run_verify(params, vopt);
    if (*scan) {
      if (l_pin >= 0) grid.l = l_pin;
      if (u_pin >= 0) grid.u = u_pin;
      return run_scan(kind, grid, out);
    }
    if (*payoff) return run_payoff(params, band_pay, bump_pay, digits);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
