#pragma once

// Parameters and exact outcome distributions of the Band-or-Bump game.
//
// A deck has m ranks of s cards. Cards are drawn one at a time; the game stops
// at the first draw after which every rank's tally lies in [l, u] (a band) or
// some rank's tally reaches u + 1 (a bump).

#include "bandbump/exactnum.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bandbump {

enum class Outcome { Band, Bump };

std::string to_string(Outcome o);

/// Which formula family governs a parameter set.
enum class GameCase {
  BumpAtFirstDraw,  // l = u = 0
  BandAtFirstDraw,  // l = 0 < u
  CouponCollector,  // 0 < l, u = s: only a band can end the game
  EqualQuota,       // 0 < l = u < s: a band only at n_max
  General,          // 0 < l < u < s
};

struct GameParams {
  int m = 0;  // ranks
  int s = 0;  // cards per rank
  int l = 0;  // lower quota
  int u = 0;  // upper quota

  /// Throws ParameterError unless m >= 1, s >= 1, 0 <= l <= u <= s.
  void validate() const;

  int t() const { return m * s; }
  /// Pigeonhole bound on the game length.
  int n_max() const { return l + (m - 1) * u; }

  GameCase classify() const;
  std::string describe() const;

  bool operator==(const GameParams&) const = default;
};

struct JointRow {
  ExactRational band;
  ExactRational bump;

  ExactRational total() const { return band + bump; }
};

/// n -> (P[N = n, band], P[N = n, bump]). Rows absent from the map carry zero mass.
class JointDistribution {
 public:
  explicit JointDistribution(GameParams params) : params_(params) {}

  const GameParams& params() const { return params_; }
  const std::map<int, JointRow>& rows() const { return rows_; }

  void set(int n, ExactRational band, ExactRational bump);
  void add(int n, Outcome outcome, const ExactRational& mass);

  ExactRational mass(int n, Outcome outcome) const;
  ExactRational total(int n) const;
  ExactRational marginal(Outcome outcome) const;
  ExactRational total_mass() const;

  /// Masses for n = first..last (inclusive), zeros where no row is stored.
  std::vector<ExactRational> sequence(Outcome outcome, int first, int last) const;

 private:
  GameParams params_;
  std::map<int, JointRow> rows_;
};

/// Equal parameters and equal mass at every (n, outcome), absent rows read as zero.
bool same_masses(const JointDistribution& a, const JointDistribution& b);

/// Smallest n at which the two distributions disagree, if any.
std::optional<int> first_mismatch(const JointDistribution& a, const JointDistribution& b);

}  // namespace bandbump
