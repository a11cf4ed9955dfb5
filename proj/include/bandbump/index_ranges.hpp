#pragma once

// Summation bounds for the bump probability in the general case 0 < l < u < s.
//
// Just before a bump at draw n, the m tallies split into k tallies equal to u,
// k' tallies below l and k'' tallies in [l, u-1], with k + k' + k'' = m,
// k >= 1 and k' >= 1. The non-capped tallies carry n_k = n - 1 - k u draws.
//
//   u + 1 <= n <= n_max                                  (draw range)
//   max{1, n - (l + (m-1)(u-1))} <= k <= floor((n-1)/u)   (outer range)
//   max{0, ceil(k''_L)} <= k'' <= min{floor(n_k/l), m-k-1} (inner range)
//
// with k''_L = (n_k - (m-k)(l-1)) / (u-l). Every (n, k) admitted by the first
// two ranges is claimed to yield a non-empty inner range; bump_kpp_range()
// enforces that claim at runtime.

#include "bandbump/game.hpp"

#include <stdexcept>
#include <vector>

namespace bandbump {

/// Raised when an admissible (n, k) yields an empty k'' range.
class IndexRangeViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct IndexInterval {
  int lo = 1;
  int hi = 0;

  bool empty() const { return lo > hi; }
  bool contains(int x) const { return lo <= x && x <= hi; }
  bool operator==(const IndexInterval&) const = default;
};

/// Draws at which a bump can end the game: [u + 1, n_max].
IndexInterval bump_n_range(const GameParams& params);

/// Outer range of k. Empty (not an error) when n is outside bump_n_range.
IndexInterval bump_k_range(const GameParams& params, int n);

/// Inner range of k'' from the closed-form bounds, without any assertion.
IndexInterval bump_kpp_bounds(const GameParams& params, int n, int k);

/// As bump_kpp_bounds, but requires n and k admissible and throws
/// IndexRangeViolation if the resulting range is empty.
IndexInterval bump_kpp_range(const GameParams& params, int n, int k);

struct KIndexDetail {
  int k = 0;
  int n_k = 0;                 // n - 1 - k u
  ExactRational kpp_lower;     // k''_L, exact
  IndexInterval kpp;           // inner range
};

/// Full set of bump summation indices at draw n.
struct BumpIndexRange {
  int n = 0;
  IndexInterval k;                 // outer range
  int k_L = 0;                     // n - {l + (m-1)(u-1)}
  int n_HI = 0;                    // (m-l) u + l (l-1)
  std::vector<KIndexDetail> per_k;
};

BumpIndexRange bump_index_range(const GameParams& params, int n);

}  // namespace bandbump
