#include "bandbump/hypergeom.hpp"

#include <algorithm>
#include <numeric>

namespace bandbump {

namespace {

void check_rectangle(int rank_size, const Rectangle& rect) {
  if (rank_size < 1) throw ParameterError("rank size must be >= 1");
  if (rect.lo.size() != rect.hi.size()) throw ParameterError("rectangle lo/hi length mismatch");
  for (size_t j = 0; j < rect.lo.size(); ++j) {
    if (rect.lo[j] < 0 || rect.lo[j] > rect.hi[j] || rect.hi[j] > rank_size) {
      throw ParameterError("rectangle coordinate " + std::to_string(j) + " bounds [" +
                           std::to_string(rect.lo[j]) + ", " + std::to_string(rect.hi[j]) +
                           "] not within [0, " + std::to_string(rank_size) + "]");
    }
  }
}

Polynomial coordinate_polynomial(int rank_size, int lo, int hi) {
  Polynomial p(static_cast<size_t>(hi) + 1);
  for (int x = lo; x <= hi; ++x) p[static_cast<size_t>(x)] = binomial(rank_size, x);
  return p;
}

Polynomial convolve(const Polynomial& a, const Polynomial& b, int max_degree) {
  if (a.empty() || b.empty()) return {};
  int degree = static_cast<int>(a.size() + b.size()) - 2;
  if (max_degree >= 0) degree = std::min(degree, max_degree);
  Polynomial out(static_cast<size_t>(degree) + 1);
  for (size_t i = 0; i < a.size() && static_cast<int>(i) <= degree; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= degree; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

Rectangle Rectangle::hypercube(int dim, int lo, int hi) {
  if (dim < 0) throw ParameterError("negative rectangle dimension");
  return Rectangle{std::vector<int>(static_cast<size_t>(dim), lo),
                   std::vector<int>(static_cast<size_t>(dim), hi)};
}

Rectangle Rectangle::product(const Rectangle& a, const Rectangle& b) {
  Rectangle r = a;
  r.lo.insert(r.lo.end(), b.lo.begin(), b.lo.end());
  r.hi.insert(r.hi.end(), b.hi.begin(), b.hi.end());
  return r;
}

int Rectangle::min_sum() const { return std::accumulate(lo.begin(), lo.end(), 0); }
int Rectangle::max_sum() const { return std::accumulate(hi.begin(), hi.end(), 0); }

Polynomial rect_generating_polynomial(int rank_size, const Rectangle& rect, int max_degree) {
  check_rectangle(rank_size, rect);
  Polynomial acc{1};
  for (size_t j = 0; j < rect.lo.size(); ++j) {
    acc = convolve(acc, coordinate_polynomial(rank_size, rect.lo[j], rect.hi[j]), max_degree);
  }
  return acc;
}

ExactInteger rect_count(const HypergeomSpec& spec, const Rectangle& rect) {
  if (rect.dim() != spec.dim) {
    throw ParameterError("rectangle dimension " + std::to_string(rect.dim()) +
                         " does not match distribution dimension " + std::to_string(spec.dim));
  }
  check_rectangle(spec.rank_size, rect);
  if (spec.draws < rect.min_sum() || spec.draws > rect.max_sum()) return 0;
  const Polynomial p = rect_generating_polynomial(spec.rank_size, rect, spec.draws);
  return p[static_cast<size_t>(spec.draws)];
}

ExactRational rect_prob(const HypergeomSpec& spec, const Rectangle& rect) {
  const ExactInteger count = rect_count(spec, rect);
  if (count == 0) return 0;
  return make_rational(count, binomial(static_cast<long>(spec.dim) * spec.rank_size, spec.draws));
}

HypercubePowers::HypercubePowers(int rank_size, int lo, int hi, int max_dim) {
  if (max_dim < 0) throw ParameterError("negative hypercube dimension");
  check_rectangle(rank_size, Rectangle::hypercube(1, lo, hi));
  const Polynomial base = coordinate_polynomial(rank_size, lo, hi);
  powers_.reserve(static_cast<size_t>(max_dim) + 1);
  powers_.push_back(Polynomial{1});
  for (int d = 1; d <= max_dim; ++d) powers_.push_back(convolve(powers_.back(), base, -1));
}

ExactInteger product_coefficient(const Polynomial& a, const Polynomial& b, int degree) {
  ExactInteger sum = 0;
  if (degree < 0) return sum;
  const int a_top = std::min(degree, static_cast<int>(a.size()) - 1);
  for (int i = std::max(0, degree - (static_cast<int>(b.size()) - 1)); i <= a_top; ++i) {
    sum += a[static_cast<size_t>(i)] * b[static_cast<size_t>(degree - i)];
  }
  return sum;
}

namespace {

void check_point_args(int s, int t, int l) {
  if (s < 1 || t < s || t % s != 0) {
    throw ParameterError("point_prob_Y: t must be a positive multiple of s");
  }
  if (l < 1) throw ParameterError("point_prob_Y: l must be >= 1");
}

}  // namespace

ExactRational point_prob_Y(int n, int s, int t, int l) {
  check_point_args(s, t, l);
  if (n < 1 || n > t) return 0;
  return make_rational(binomial(s - 1, l - 1) * binomial(t - s, n - l), binomial(t - 1, n - 1));
}

ExactRational point_prob_Y_dual(int n, int s, int t, int l) {
  check_point_args(s, t, l);
  if (n < 1 || n > t) return 0;
  return make_rational(binomial(n - 1, l - 1) * binomial(t - n, s - l), binomial(t - 1, s - 1));
}

}  // namespace bandbump
