#include "bandbump/engine.hpp"

#include <algorithm>
#include <array>

namespace bandbump {

namespace {

const char* case_name(GameCase c) {
  switch (c) {
    case GameCase::BumpAtFirstDraw: return "l = u = 0";
    case GameCase::BandAtFirstDraw: return "l = 0 < u";
    case GameCase::CouponCollector: return "u = s";
    case GameCase::EqualQuota: return "0 < l = u < s";
    case GameCase::General: return "0 < l < u < s";
  }
  return "?";
}

ExactInteger power(const ExactInteger& base, int e) {
  ExactInteger r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

GameEngine::GameEngine(const GameParams& params)
    : params_(params), case_(params.classify()), binom_(params.t()) {
  const auto& [m, s, l, u] = params_;
  switch (case_) {
    case GameCase::General:
      band_poly_ = rect_generating_polynomial(s, Rectangle::hypercube(m - 1, l, u));
      below_.emplace(s, 0, l - 1, m);
      within_.emplace(s, l, u - 1, m);
      break;
    case GameCase::CouponCollector:
      boundary_poly_ = rect_generating_polynomial(s, Rectangle::hypercube(m, l, s));
      break;
    case GameCase::EqualQuota:
      boundary_poly_ = rect_generating_polynomial(s, Rectangle::hypercube(m, 0, u));
      break;
    default:
      break;
  }
}

void GameEngine::require(GameCase expected, const char* what) const {
  if (case_ != expected) {
    throw ParameterError(std::string(what) + " applies to " + case_name(expected) + "; " +
                         params_.describe() + " is the " + case_name(case_) + " case");
  }
}

BandTerms GameEngine::band_terms(int n) const {
  require(GameCase::General, "band_joint");
  const auto& [m, s, l, u] = params_;
  const int t = params_.t();
  BandTerms bt;
  bt.n = n;
  if (n < 1 || n > t) return bt;

  bt.leading = point_prob_Y(n, s, t, l);
  bt.leading_dual = point_prob_Y_dual(n, s, t, l);
  bt.leading_from_draws = make_rational(m * (s + 1 - l) * binom_(s, l - 1) *
                                            binom_((m - 1) * s, n - l),
                                        (t + 1 - n) * binom_(t, n - 1));

  const int draws = n - l;
  if (draws >= 0 && draws < static_cast<int>(band_poly_.size()) &&
      band_poly_[static_cast<size_t>(draws)] != 0) {
    bt.rect = make_rational(band_poly_[static_cast<size_t>(draws)],
                            binom_((m - 1) * s, draws));
  }
  return bt;
}

ExactRational GameEngine::band_joint(int n) const {
  const BandTerms bt = band_terms(n);
  if (bt.leading != bt.leading_dual || bt.leading != bt.leading_from_draws) {
    throw IdentityViolation("band leading factors disagree at n=" + std::to_string(n) + " for " +
                            params_.describe());
  }
  return bt.value();
}

ExactRational GameEngine::band_marginal() const {
  require(GameCase::General, "band_marginal");
  ExactRational sum = 0;
  for (int n = params_.m * params_.l; n <= params_.n_max(); ++n) sum += band_joint(n);
  return sum;
}

std::vector<BumpTerm> GameEngine::bump_terms(int n) const {
  require(GameCase::General, "bump_joint");
  const auto& [m, s, l, u] = params_;
  const int t = params_.t();
  std::vector<BumpTerm> terms;
  const IndexInterval ks = bump_k_range(params_, n);
  for (int k = ks.lo; k <= ks.hi; ++k) {
    const IndexInterval kpps = bump_kpp_bounds(params_, n, k);
    const ExactInteger capped = power(binom_(s, u), k);
    for (int kpp = kpps.lo; kpp <= kpps.hi; ++kpp) {
      BumpTerm bt;
      bt.k = k;
      bt.k_within = kpp;
      bt.k_below = m - k - kpp;
      bt.n_k = n - 1 - k * u;
      bt.count = product_coefficient((*below_)[bt.k_below], (*within_)[kpp], bt.n_k);

      const std::array<long, 3> parts{k, bt.k_below, kpp};
      bt.coefficient = make_rational(multinomial(m, parts) * (k * (s - u)),
                                     (t + 1 - n) * binom_(t, n - 1));
      bt.coefficient_simplified =
          make_rational(binom_(m, k) * (k * (s - u)) * binom_(m - k, kpp), n * binom_(t, n));
      bt.value = bt.coefficient * ExactRational(capped * bt.count);

      const ExactInteger rect_total = binom_(t - k * s, bt.n_k);
      const ExactRational mixed_prob =
          bt.count == 0 ? ExactRational(0) : make_rational(bt.count, rect_total);
      bt.value_simplified =
          bt.coefficient_simplified * ExactRational(capped * rect_total) * mixed_prob;
      terms.push_back(std::move(bt));
    }
  }
  return terms;
}

ExactRational GameEngine::bump_joint(int n) const {
  require(GameCase::General, "bump_joint");
  const IndexInterval ks = bump_k_range(params_, n);
  for (int k = ks.lo; k <= ks.hi; ++k) bump_kpp_range(params_, n, k);

  ExactRational sum = 0;
  for (const BumpTerm& bt : bump_terms(n)) {
    const std::string where = " at n=" + std::to_string(n) + ", k=" + std::to_string(bt.k) +
                              ", k''=" + std::to_string(bt.k_within) + " for " +
                              params_.describe();
    if (bt.count <= 0) throw IndexRangeViolation("non-positive bump summand" + where);
    if (bt.coefficient != bt.coefficient_simplified || bt.value != bt.value_simplified) {
      throw IdentityViolation("simplified bump coefficient disagrees" + where);
    }
    sum += bt.value;
  }
  return sum;
}

ExactRational GameEngine::boundary_prob(int draws) const {
  if (draws < 0 || draws >= static_cast<int>(boundary_poly_.size())) return 0;
  const ExactInteger& c = boundary_poly_[static_cast<size_t>(draws)];
  if (c == 0) return 0;
  return make_rational(c, binom_(params_.t(), draws));
}

ExactRational GameEngine::coupon_band(int n) const {
  require(GameCase::CouponCollector, "coupon_band");
  if (n < 1 || n > params_.t()) return 0;
  return boundary_prob(n) - boundary_prob(n - 1);
}

JointRow GameEngine::equal_quota(int n) const {
  require(GameCase::EqualQuota, "equal_quota");
  JointRow row;
  const int n_max = params_.n_max();
  if (n >= params_.u + 1 && n <= n_max) row.bump = boundary_prob(n - 1) - boundary_prob(n);
  if (n == n_max) row.band = boundary_prob(n_max);
  return row;
}

JointDistribution GameEngine::joint_distribution() const {
  const auto& [m, s, l, u] = params_;
  const int n_max = params_.n_max();
  JointDistribution dist(params_);
  switch (case_) {
    case GameCase::BumpAtFirstDraw:
      dist.set(1, 0, 1);
      break;
    case GameCase::BandAtFirstDraw:
      dist.set(1, 1, 0);
      break;
    case GameCase::CouponCollector:
      for (int n = m * l; n <= n_max; ++n) dist.set(n, coupon_band(n), 0);
      break;
    case GameCase::EqualQuota:
      for (int n = std::min(m * l, u + 1); n <= n_max; ++n) {
        JointRow row = equal_quota(n);
        dist.set(n, std::move(row.band), std::move(row.bump));
      }
      break;
    case GameCase::General:
      for (int n = std::min(m * l, u + 1); n <= n_max; ++n) {
        dist.set(n, band_joint(n), bump_joint(n));
      }
      break;
  }
  return dist;
}

ExactRational band_joint(const GameParams& params, int n) { return GameEngine(params).band_joint(n); }
ExactRational band_marginal(const GameParams& params) { return GameEngine(params).band_marginal(); }
ExactRational bump_joint(const GameParams& params, int n) { return GameEngine(params).bump_joint(n); }
ExactRational coupon_band(const GameParams& params, int n) { return GameEngine(params).coupon_band(n); }
JointRow equal_quota(const GameParams& params, int n) { return GameEngine(params).equal_quota(n); }
JointDistribution joint_distribution(const GameParams& params) {
  return GameEngine(params).joint_distribution();
}

ExactRational book_or_band_bump_joint(int n) {
  // m = 13, s = 4, l = 1, u = 3: each below-quota tally is 0, each within-quota
  // tally is 1 or 2, so the k'' block with j twos and k'' - j ones has weight
  // C(k'', j) 4^(k'' - j) 6^j and j = n_k - k''.
  if (n < 4 || n > 37) return 0;
  ExactRational sum = 0;
  const ExactInteger norm = n * binomial(52, n);
  for (int k = std::max(1, n - 25); k <= (n - 1) / 3; ++k) {
    const int n_k = n - 1 - 3 * k;
    ExactInteger inner = 0;
    for (int kpp = (n_k + 1) / 2; kpp <= std::min(n_k, 12 - k); ++kpp) {
      const int twos = n_k - kpp;
      if (twos > kpp) continue;
      inner += binomial(13 - k, kpp) * binomial(kpp, twos) * power(4, kpp - twos) *
               power(6, twos);
    }
    sum += make_rational(binomial(13, k) * k * power(4, k) * inner, norm);
  }
  return sum;
}

}  // namespace bandbump
