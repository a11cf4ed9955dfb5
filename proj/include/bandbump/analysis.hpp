#pragma once

#include "bandbump/game.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bandbump {

struct ConditionalMoments {
  ExactRational marginal;
  ExactRational mean;
  ExactRational variance;
  std::string sd;
};

/// Moments of N overall and given each outcome. Variances are exact; standard
/// deviations are correctly rounded decimals.
struct MomentsReport {
  ExactRational p_band;
  ExactRational p_bump;
  ExactRational mean;
  ExactRational variance;
  std::string sd;
  std::optional<ConditionalMoments> band;  // empty when P[band] = 0
  std::optional<ConditionalMoments> bump;  // empty when P[bump] = 0
  std::vector<Outcome> omitted;
};

/// Requires total mass 1 (ParameterError otherwise).
MomentsReport moments(const JointDistribution& dist, int sd_digits = 6);

struct PayoffSpec {
  ExactRational band_payoff;
  ExactRational bump_payoff;
};

ExactRational payoff_ev(const JointDistribution& dist, const PayoffSpec& spec);

struct LogConcavityVerdict {
  bool log_concave = true;
  bool consecutive_support = true;
  bool non_negative = true;
  /// Interior indices i with p[i+1] p[i-1] > p[i]^2.
  std::vector<size_t> violations;
};

/// Exact check of p[i+1] p[i-1] <= p[i]^2 and of a gap-free support.
LogConcavityVerdict log_concavity(std::span<const ExactRational> seq);

/// Cells (m, s, l, u) with 0 < l < u < s; l and u may be pinned.
struct ScanGrid {
  int m_min = 2;
  int m_max = 8;
  int s_min = 2;
  int s_max = 8;
  std::optional<int> l;
  std::optional<int> u;

  std::vector<GameParams> cells() const;
};

struct Counterexample {
  GameParams params;
  int n = 0;
  int k = 0;  // 0 when not applicable
  std::string detail;
};

struct ScanCell {
  GameParams params;
  long checks = 0;
  bool pass = true;
};

struct ScanReport {
  std::string kind;
  ScanGrid grid;
  std::vector<ScanCell> cells;
  std::vector<Counterexample> counterexamples;

  bool clean() const { return counterexamples.empty(); }
  long total_checks() const;
};

/// Every (n, k) admitted by the bump ranges must give a non-empty k'' range
/// whose summands are all strictly positive.
ScanReport nonvacuity_scan(const ScanGrid& grid);

/// Log-concavity of n -> P[N = n, outcome] over [m l, n_max] (band) or
/// [u + 1, n_max] (bump).
ScanReport logconcavity_scan(const ScanGrid& grid, Outcome outcome);
ScanReport band_logconcavity_scan(const ScanGrid& grid);
ScanReport bump_logconcavity_scan(const ScanGrid& grid);

}  // namespace bandbump
