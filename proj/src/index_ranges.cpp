#include "bandbump/index_ranges.hpp"

#include <algorithm>

namespace bandbump {

namespace {

void require_general(const GameParams& params) {
  if (params.classify() != GameCase::General) {
    throw ParameterError("bump index ranges need 0 < l < u < s (" + params.describe() + ")");
  }
}

}  // namespace

IndexInterval bump_n_range(const GameParams& params) {
  require_general(params);
  return {params.u + 1, params.n_max()};
}

IndexInterval bump_k_range(const GameParams& params, int n) {
  if (!bump_n_range(params).contains(n)) return {};
  const auto& [m, s, l, u] = params;
  const int k_L = n - (l + (m - 1) * (u - 1));
  return {std::max(1, k_L), static_cast<int>(floor_div(n - 1, u))};
}

IndexInterval bump_kpp_bounds(const GameParams& params, int n, int k) {
  require_general(params);
  const auto& [m, s, l, u] = params;
  const int n_k = n - 1 - k * u;
  const long lower = ceil_div(n_k - static_cast<long>(m - k) * (l - 1), u - l);
  return {static_cast<int>(std::max(0L, lower)),
          std::min(static_cast<int>(floor_div(n_k, l)), m - k - 1)};
}

IndexInterval bump_kpp_range(const GameParams& params, int n, int k) {
  const IndexInterval ks = bump_k_range(params, n);
  if (!ks.contains(k)) {
    throw ParameterError("k=" + std::to_string(k) + " not admissible at n=" + std::to_string(n) +
                         " for " + params.describe());
  }
  const IndexInterval kpp = bump_kpp_bounds(params, n, k);
  if (kpp.empty()) {
    throw IndexRangeViolation("empty k'' range [" + std::to_string(kpp.lo) + ", " +
                            std::to_string(kpp.hi) + "] at n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + " for " + params.describe());
  }
  return kpp;
}

BumpIndexRange bump_index_range(const GameParams& params, int n) {
  const auto& [m, s, l, u] = params;
  BumpIndexRange r;
  r.n = n;
  r.k = bump_k_range(params, n);
  r.k_L = n - (l + (m - 1) * (u - 1));
  r.n_HI = (m - l) * u + l * (l - 1);
  if (r.k.empty()) return r;
  for (int k = r.k.lo; k <= r.k.hi; ++k) {
    KIndexDetail d;
    d.k = k;
    d.n_k = n - 1 - k * u;
    d.kpp_lower = make_rational(d.n_k - (m - k) * (l - 1), u - l);
    d.kpp = bump_kpp_bounds(params, n, k);
    r.per_k.push_back(std::move(d));
  }
  return r;
}

}  // namespace bandbump
