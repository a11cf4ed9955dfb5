#pragma once

// Exact joint distribution of the stopping time N and the outcome.
//
// General case (0 < l < u < s):
//
//   P[N = n, band] = P[Y_{n-1} = l-1] * P[X' in [l, u]^{m-1}],
//       X' ~ H_{m-1}(n - l; s, ..., s)
//
//   P[N = n, bump] = sum over configurations (k, k', k'') of
//       (m; k, k', k'') * C(s, u)^k * #{x in [0, l-1]^{k'} x [l, u-1]^{k''}, |x| = n_k}
//       * k (s - u) / ((t + 1 - n) C(t, n - 1))
//
// where #{...} is the binomial-weighted count. Boundary parameter sets are
// handled by dedicated formulas (see GameCase).

#include "bandbump/game.hpp"
#include "bandbump/hypergeom.hpp"
#include "bandbump/index_ranges.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace bandbump {

/// Raised when two algebraically equivalent routes disagree.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Factors of the band probability at draw n, computed along three routes.
struct BandTerms {
  int n = 0;
  ExactRational leading;            // C(s-1, l-1) C(t-s, n-l) / C(t-1, n-1)
  ExactRational leading_dual;       // C(n-1, l-1) C(t-n, s-l) / C(t-1, s-1)
  ExactRational leading_from_draws; // m (s+1-l)/(t+1-n) C(s, l-1)/C(t, n-1) * C((m-1)s, n-l)
  ExactRational rect;               // P[X' in [l, u]^{m-1}]

  ExactRational value() const { return leading * rect; }
};

/// One (k, k', k'') summand of the bump probability.
struct BumpTerm {
  int k = 0;
  int k_below = 0;   // k': tallies below l
  int k_within = 0;  // k'': tallies in [l, u-1]
  int n_k = 0;
  ExactInteger count;                    // weighted count of the mixed rectangle
  ExactRational coefficient;             // (m; k, k', k'') k(s-u) / ((t+1-n) C(t, n-1))
  ExactRational coefficient_simplified;  // C(m, k) k(s-u) / (n C(t, n)) * C(m-k, k'')
  ExactRational value;             // coefficient * C(s,u)^k * count
  ExactRational value_simplified;  // coefficient_simplified * C(s,u)^k * C(t-ks, n_k) * P[mixed]
};

class GameEngine {
 public:
  explicit GameEngine(const GameParams& params);

  const GameParams& params() const { return params_; }
  GameCase game_case() const { return case_; }

  // General case only; ParameterError otherwise.
  BandTerms band_terms(int n) const;
  ExactRational band_joint(int n) const;
  ExactRational band_marginal() const;
  std::vector<BumpTerm> bump_terms(int n) const;
  ExactRational bump_joint(int n) const;

  /// u = s: P[X^(n) in [l, s]^m] - P[X^(n-1) in [l, s]^m].
  ExactRational coupon_band(int n) const;
  /// 0 < l = u < s: (band, bump) at draw n.
  JointRow equal_quota(int n) const;

  JointDistribution joint_distribution() const;

 private:
  void require(GameCase expected, const char* what) const;
  // P[X^(draws) in boundary_rect], X ~ H_m(draws; s, ..., s)
  ExactRational boundary_prob(int draws) const;

  GameParams params_;
  GameCase case_;
  BinomialTable binom_;
  Polynomial band_poly_;
  std::optional<HypercubePowers> below_;
  std::optional<HypercubePowers> within_;
  Polynomial boundary_poly_;
};

ExactRational band_joint(const GameParams& params, int n);
ExactRational band_marginal(const GameParams& params);
ExactRational bump_joint(const GameParams& params, int n);
ExactRational coupon_band(const GameParams& params, int n);
JointRow equal_quota(const GameParams& params, int n);
JointDistribution joint_distribution(const GameParams& params);

/// Bump probability for the 13-rank, 4-card, l = 1, u = 3 game, evaluated from
/// its specialised closed form (inner sums renormalised over k'' ranks only).
ExactRational book_or_band_bump_joint(int n);

}  // namespace bandbump
