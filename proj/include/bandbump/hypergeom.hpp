#pragma once

// Rectangular event probabilities for the central multiple hypergeometric law
// H_d(n; s, ..., s): the tally vector after n draws without replacement from a
// deck of d ranks with s cards each.
//
// P[X in R] = [z^n] prod_j ( sum_{x = lo_j}^{hi_j} C(s, x) z^x ) / C(d s, n)
//
// The numerator is evaluated by exact polynomial convolution, one coordinate
// at a time, truncated at the requested degree.

#include "bandbump/exactnum.hpp"

#include <vector>

namespace bandbump {

using Polynomial = std::vector<ExactInteger>;

/// Product region of tally vectors with per-coordinate bounds lo[j] <= x[j] <= hi[j].
struct Rectangle {
  std::vector<int> lo;
  std::vector<int> hi;

  static Rectangle hypercube(int dim, int lo, int hi);
  /// Cartesian product: coordinates of `a` followed by those of `b`.
  static Rectangle product(const Rectangle& a, const Rectangle& b);

  int dim() const { return static_cast<int>(lo.size()); }
  int min_sum() const;
  int max_sum() const;

  bool operator==(const Rectangle&) const = default;
};

struct HypergeomSpec {
  int dim = 0;        // number of ranks
  int draws = 0;      // cards drawn
  int rank_size = 0;  // cards per rank
};

/// Coefficients of prod_j sum_{x=lo_j}^{hi_j} C(s, x) z^x up to max_degree
/// (the full product when max_degree < 0). The empty product is {1}.
Polynomial rect_generating_polynomial(int rank_size, const Rectangle& rect, int max_degree = -1);

/// sum over x in rect with sum(x) = draws of prod_j C(s, x_j).
ExactInteger rect_count(const HypergeomSpec& spec, const Rectangle& rect);

/// P[X in rect] for X ~ H_dim(draws; s, ..., s). Zero for infeasible draws.
/// dim = 0: probability 1 at draws = 0, else 0.
ExactRational rect_prob(const HypergeomSpec& spec, const Rectangle& rect);

/// Generating polynomials of the hypercubes [lo, hi]^d for d = 0..max_dim,
/// built by repeated convolution. Immutable after construction.
class HypercubePowers {
 public:
  HypercubePowers(int rank_size, int lo, int hi, int max_dim);

  int max_dim() const { return static_cast<int>(powers_.size()) - 1; }
  const Polynomial& operator[](int d) const { return powers_.at(static_cast<size_t>(d)); }

 private:
  std::vector<Polynomial> powers_;
};

/// Coefficient of z^degree in a(z) * b(z).
ExactInteger product_coefficient(const Polynomial& a, const Polynomial& b, int degree);

/// Univariate point probability P[Y_{n-1} = l - 1] where
/// (Y, n-1-Y) ~ H_2(n-1; s-1, t-s), i.e. C(s-1, l-1) C(t-s, n-l) / C(t-1, n-1).
ExactRational point_prob_Y(int n, int s, int t, int l);

/// Same probability through the dual representation
/// (Y, s-1-Y) ~ H_2(s-1; n-1, t-n): C(n-1, l-1) C(t-n, s-l) / C(t-1, s-1).
ExactRational point_prob_Y_dual(int n, int s, int t, int l);

}  // namespace bandbump
