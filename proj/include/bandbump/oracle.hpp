#pragma once

// Ground truth that never touches the closed-form probabilities: an exact
// forward dynamic program over tally vectors, and a seeded deck simulator.

#include "bandbump/game.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace bandbump::oracle {

inline constexpr int kDefaultDeckCap = 16;

/// Band test straight from the definition: every tally in [l, u].
bool is_band(const GameParams& params, const std::vector<int>& tallies);
/// Bump test straight from the definition: some tally >= u + 1.
bool is_bump(const GameParams& params, const std::vector<int>& tallies);

/// Exact joint distribution by forward DP over tally vectors. Refuses
/// (ParameterError) decks larger than deck_cap cards.
JointDistribution exhaustive_distribution(const GameParams& params,
                                          int deck_cap = kDefaultDeckCap);

struct GameRecord {
  int n = 0;
  Outcome outcome = Outcome::Band;
};

struct EmpiricalDistribution {
  GameParams params;
  long trials = 0;
  std::map<std::pair<int, Outcome>, long> counts;

  long count(int n, Outcome o) const;
  long total() const;
};

/// Generator for trial `trial` of a run seeded with `seed`.
std::mt19937_64 trial_generator(std::uint64_t seed, std::uint64_t trial);

/// Plays one game, drawing cards by a partial Fisher-Yates shuffle.
GameRecord play(const GameParams& params, std::mt19937_64& rng);

/// Plays `trials` independent games. Same (params, trials, seed), same counts.
EmpiricalDistribution simulate(const GameParams& params, long trials, std::uint64_t seed);

struct ComparisonOptions {
  double z_threshold = 4.0;
  /// Cells with smaller (non-zero) exact probability are reported but not gated.
  double min_probability = 0.0;
};

struct ComparisonCell {
  int n = 0;
  Outcome outcome = Outcome::Band;
  double probability = 0.0;
  long observed = 0;
  double expected = 0.0;
  double z = 0.0;
  bool gated = true;
};

struct ComparisonReport {
  std::vector<ComparisonCell> cells;
  double max_abs_z = 0.0;
  /// Observations in cells of exact probability zero.
  long impossible_observations = 0;
  double z_threshold = 4.0;
  bool passed = true;
};

ComparisonReport compare(const JointDistribution& exact, const EmpiricalDistribution& empirical,
                         const ComparisonOptions& options = {});

}  // namespace bandbump::oracle
