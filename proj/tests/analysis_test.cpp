#include "bandbump/analysis.hpp"
#include "bandbump/engine.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bandbump;

namespace {

const GameParams kFourSuits{4, 13, 5, 8};
const GameParams kBookOrBand{13, 4, 1, 3};

std::vector<ExactRational> rationals(std::initializer_list<long> xs) {
  std::vector<ExactRational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Positive log-concave sequence: successive ratios are non-increasing.
std::vector<ExactRational> random_log_concave(std::mt19937_64& rng, size_t len) {
  std::vector<ExactRational> ratios;
  std::uniform_int_distribution<long> num(1, 40), den(1, 40);
  for (size_t i = 0; i + 1 < len; ++i) ratios.push_back(make_rational(num(rng), den(rng)));
  std::sort(ratios.begin(), ratios.end(), std::greater<>());
  std::vector<ExactRational> seq{make_rational(num(rng), den(rng))};
  for (const auto& r : ratios) seq.push_back(seq.back() * r);
  return seq;
}

}  // namespace

TEST(Moments, FourSuitsFooter) {
  const MomentsReport r = moments(joint_distribution(kFourSuits));
  EXPECT_EQ(to_decimal(r.p_band, 6), "0.605984");
  EXPECT_EQ(to_decimal(r.p_bump, 6), "0.394016");
  EXPECT_EQ(to_decimal(r.mean, 6), "23.9151");
  EXPECT_EQ(r.sd, "2.33806");
  ASSERT_TRUE(r.band && r.bump);
  EXPECT_EQ(to_decimal(r.band->mean, 6), "23.8664");
  EXPECT_EQ(to_decimal(r.bump->mean, 6), "23.9899");
  EXPECT_EQ(r.band->sd, "2.00364");
  EXPECT_EQ(r.bump->sd, "2.77314");
  EXPECT_TRUE(r.omitted.empty());
}

TEST(Moments, SingleAtom) {
  JointDistribution d(GameParams{2, 2, 0, 1});
  d.set(1, 1, 0);
  const MomentsReport r = moments(d);
  EXPECT_EQ(r.mean, 1);
  EXPECT_EQ(r.variance, 0);
  EXPECT_EQ(r.sd, "0");
  EXPECT_FALSE(r.bump.has_value());
  ASSERT_EQ(r.omitted.size(), 1u);
  EXPECT_EQ(r.omitted[0], Outcome::Bump);
}

TEST(Moments, RejectsNonUnitMass) {
  JointDistribution d(GameParams{2, 2, 1, 1});
  d.set(2, make_rational(1, 2), 0);
  EXPECT_THROW(moments(d), ParameterError);
}

TEST(Moments, LawOfTotalExpectation) {
  for (const GameParams& p : {kFourSuits, kBookOrBand, GameParams{5, 6, 2, 4},
                              GameParams{3, 5, 2, 2}, GameParams{4, 3, 1, 3}}) {
    const MomentsReport r = moments(joint_distribution(p));
    ExactRational weighted = 0;
    if (r.band) weighted += r.p_band * r.band->mean;
    if (r.bump) weighted += r.p_bump * r.bump->mean;
    EXPECT_EQ(weighted, r.mean) << p.describe();
    EXPECT_EQ(r.p_band + r.p_bump, 1);
  }
}

TEST(PayoffEv, HeadlineClaims) {
  // book +2, band -3: a little under five cents
  const ExactRational book = payoff_ev(joint_distribution(kBookOrBand), {-3, 2});
  EXPECT_GT(book, make_rational(4, 100));
  EXPECT_LT(book, make_rational(5, 100));
  EXPECT_EQ(book, 2 - 5 * band_marginal(kBookOrBand));

  // band +2, bump -3: about three cents
  const ExactRational suits = payoff_ev(joint_distribution(kFourSuits), {2, -3});
  EXPECT_GT(suits, make_rational(25, 1000));
  EXPECT_LT(suits, make_rational(35, 1000));

  EXPECT_EQ(payoff_ev(joint_distribution(kFourSuits), {0, 0}), 0);
}

TEST(PayoffEv, LinearInPayoffs) {
  const JointDistribution d = joint_distribution(GameParams{5, 6, 2, 4});
  const PayoffSpec base{make_rational(7, 4), make_rational(-5, 3)};
  for (const ExactRational& a : {ExactRational(3), make_rational(-2, 7), ExactRational(0)}) {
    const PayoffSpec scaled{a * base.band_payoff, a * base.bump_payoff};
    EXPECT_EQ(payoff_ev(d, scaled), a * payoff_ev(d, base));
  }
}

TEST(LogConcavity, Examples) {
  const auto ok = rationals({1, 2, 3, 2, 1});
  EXPECT_TRUE(log_concavity(ok).log_concave);

  const auto gap = rationals({1, 0, 1});
  const LogConcavityVerdict v = log_concavity(gap);
  EXPECT_FALSE(v.log_concave);
  EXPECT_FALSE(v.consecutive_support);

  const auto single = rationals({5});
  EXPECT_TRUE(log_concavity(single).log_concave);
  EXPECT_TRUE(log_concavity(std::vector<ExactRational>{}).log_concave);

  const auto bumpy = rationals({1, 1, 4});
  const LogConcavityVerdict w = log_concavity(bumpy);
  EXPECT_FALSE(w.log_concave);
  ASSERT_EQ(w.violations.size(), 1u);
  EXPECT_EQ(w.violations[0], 1u);

  const auto negative = rationals({1, -1, 1});
  EXPECT_FALSE(log_concavity(negative).non_negative);

  const auto padded = rationals({0, 0, 1, 2, 1, 0});
  EXPECT_TRUE(log_concavity(padded).log_concave);
}

TEST(LogConcavity, ClosedUnderProducts) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const size_t len = 2 + rng() % 12;
    const auto a = random_log_concave(rng, len);
    const auto b = random_log_concave(rng, len);
    ASSERT_TRUE(log_concavity(a).log_concave);
    ASSERT_TRUE(log_concavity(b).log_concave);
    std::vector<ExactRational> prod;
    for (size_t i = 0; i < len; ++i) prod.push_back(a[i] * b[i]);
    EXPECT_TRUE(log_concavity(prod).log_concave);
  }
}

TEST(LogConcavity, FourSuitsSequences) {
  const JointDistribution d = joint_distribution(kFourSuits);
  EXPECT_TRUE(log_concavity(d.sequence(Outcome::Band, 20, 29)).log_concave);
  EXPECT_TRUE(log_concavity(d.sequence(Outcome::Bump, 9, 29)).log_concave);
}

TEST(ScanGrid, CellsSkipBoundaryQuotas) {
  const ScanGrid grid{2, 3, 2, 5, std::nullopt, std::nullopt};
  for (const GameParams& p : grid.cells()) {
    EXPECT_EQ(p.classify(), GameCase::General);
  }
  // s = 2 admits no 0 < l < u < 2; s = 3: (1,2); s = 4: 3 pairs; s = 5: 6 pairs
  EXPECT_EQ(grid.cells().size(), 2u * (0 + 1 + 3 + 6));
  const ScanGrid empty{5, 4, 2, 8, std::nullopt, std::nullopt};
  EXPECT_TRUE(empty.cells().empty());
  EXPECT_TRUE(nonvacuity_scan(empty).clean());
}

TEST(NonvacuityScan, SmallGridAndBookOrBand) {
  const ScanReport small = nonvacuity_scan(ScanGrid{2, 5, 2, 6, std::nullopt, std::nullopt});
  EXPECT_TRUE(small.clean());
  EXPECT_GT(small.total_checks(), 0);

  const ScanReport book = nonvacuity_scan(ScanGrid{13, 13, 4, 4, 1, 3});
  ASSERT_EQ(book.cells.size(), 1u);
  EXPECT_EQ(book.cells[0].params, kBookOrBand);
  EXPECT_TRUE(book.clean());
}

TEST(LogConcavityScan, HeadlineCells) {
  const ScanReport t1 = bump_logconcavity_scan(ScanGrid{4, 4, 13, 13, 5, 8});
  ASSERT_EQ(t1.cells.size(), 1u);
  EXPECT_TRUE(t1.clean());
  EXPECT_TRUE(bump_logconcavity_scan(ScanGrid{13, 13, 4, 4, 1, 3}).clean());
  EXPECT_TRUE(band_logconcavity_scan(ScanGrid{4, 4, 13, 13, 5, 8}).clean());
  EXPECT_TRUE(band_logconcavity_scan(ScanGrid{2, 5, 2, 7, std::nullopt, std::nullopt}).clean());
}
