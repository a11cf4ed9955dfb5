#include "bandbump/oracle.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <set>

namespace bandbump::oracle {

bool is_band(const GameParams& params, const std::vector<int>& tallies) {
  return std::all_of(tallies.begin(), tallies.end(),
                     [&](int x) { return params.l <= x && x <= params.u; });
}

bool is_bump(const GameParams& params, const std::vector<int>& tallies) {
  return std::any_of(tallies.begin(), tallies.end(), [&](int x) { return x >= params.u + 1; });
}

JointDistribution exhaustive_distribution(const GameParams& params, int deck_cap) {
  params.validate();
  const int t = params.t();
  if (t > deck_cap) {
    throw ParameterError("exhaustive oracle refuses a " + std::to_string(t) +
                         "-card deck (cap " + std::to_string(deck_cap) + ")");
  }

  JointDistribution dist(params);
  // Probability of holding each tally vector after n draws without having stopped.
  std::map<std::vector<int>, ExactRational> alive;
  alive.emplace(std::vector<int>(static_cast<size_t>(params.m), 0), 1);

  for (int n = 0; n < t && !alive.empty(); ++n) {
    std::map<std::vector<int>, ExactRational> next;
    const int remaining = t - n;
    for (const auto& [tallies, p] : alive) {
      for (size_t j = 0; j < tallies.size(); ++j) {
        const int left = params.s - tallies[j];
        if (left == 0) continue;
        std::vector<int> drawn = tallies;
        ++drawn[j];
        const ExactRational q = p * make_rational(left, remaining);
        if (is_bump(params, drawn)) {
          dist.add(n + 1, Outcome::Bump, q);
        } else if (is_band(params, drawn)) {
          dist.add(n + 1, Outcome::Band, q);
        } else {
          next[std::move(drawn)] += q;
        }
      }
    }
    alive = std::move(next);
  }
  return dist;
}

long EmpiricalDistribution::count(int n, Outcome o) const {
  auto it = counts.find({n, o});
  return it == counts.end() ? 0 : it->second;
}

long EmpiricalDistribution::total() const {
  long sum = 0;
  for (const auto& [key, c] : counts) sum += c;
  return sum;
}

std::mt19937_64 trial_generator(std::uint64_t seed, std::uint64_t trial) {
  // SplitMix64 finalizer over (seed, trial) decorrelates neighbouring trials.
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return std::mt19937_64(mix(mix(seed) ^ trial));
}

GameRecord play(const GameParams& params, std::mt19937_64& rng) {
  const int t = params.t();
  std::vector<int> deck;
  deck.reserve(static_cast<size_t>(t));
  for (int rank = 0; rank < params.m; ++rank) deck.insert(deck.end(), params.s, rank);

  std::vector<int> tallies(static_cast<size_t>(params.m), 0);
  for (int n = 1; n <= t; ++n) {
    std::uniform_int_distribution<int> pick(n - 1, t - 1);
    std::swap(deck[static_cast<size_t>(n - 1)], deck[static_cast<size_t>(pick(rng))]);
    ++tallies[static_cast<size_t>(deck[static_cast<size_t>(n - 1)])];
    if (is_bump(params, tallies)) return {n, Outcome::Bump};
    if (is_band(params, tallies)) return {n, Outcome::Band};
  }
  throw std::logic_error("game exhausted the deck without stopping: " + params.describe());
}

EmpiricalDistribution simulate(const GameParams& params, long trials, std::uint64_t seed) {
  params.validate();
  if (trials < 1) throw ParameterError("simulate: trials must be >= 1");
  EmpiricalDistribution emp;
  emp.params = params;
  emp.trials = trials;
  for (long i = 0; i < trials; ++i) {
    auto rng = trial_generator(seed, static_cast<std::uint64_t>(i));
    const GameRecord r = play(params, rng);
    ++emp.counts[{r.n, r.outcome}];
  }
  return emp;
}

ComparisonReport compare(const JointDistribution& exact, const EmpiricalDistribution& empirical,
                         const ComparisonOptions& options) {
  if (!(exact.params() == empirical.params)) {
    throw ParameterError("compare: exact " + exact.params().describe() + " vs empirical " +
                         empirical.params.describe());
  }
  if (empirical.trials < 1) throw ParameterError("compare: empirical distribution has no trials");

  ComparisonReport report;
  report.z_threshold = options.z_threshold;
  const double trials = static_cast<double>(empirical.trials);

  std::set<std::pair<int, Outcome>> keys;
  for (const auto& [n, row] : exact.rows()) {
    if (row.band != 0) keys.insert({n, Outcome::Band});
    if (row.bump != 0) keys.insert({n, Outcome::Bump});
  }
  for (const auto& [key, c] : empirical.counts) {
    if (c > 0) keys.insert(key);
  }

  for (const auto& [n, outcome] : keys) {
    ComparisonCell cell;
    cell.n = n;
    cell.outcome = outcome;
    cell.probability = exact.mass(n, outcome).get_d();
    cell.observed = empirical.count(n, outcome);
    cell.expected = trials * cell.probability;
    if (cell.probability == 0.0) {
      report.impossible_observations += cell.observed;
      cell.z = std::numeric_limits<double>::infinity();
    } else {
      const double se = std::sqrt(trials * cell.probability * (1.0 - cell.probability));
      cell.z = se > 0.0 ? (static_cast<double>(cell.observed) - cell.expected) / se : 0.0;
      cell.gated = cell.probability >= options.min_probability;
      if (cell.gated) report.max_abs_z = std::max(report.max_abs_z, std::abs(cell.z));
    }
    report.cells.push_back(cell);
  }
  report.passed = report.impossible_observations == 0 && report.max_abs_z < options.z_threshold;
  return report;
}

}  // namespace bandbump::oracle
