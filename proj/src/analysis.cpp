#include "bandbump/analysis.hpp"

#include "bandbump/engine.hpp"
#include "bandbump/index_ranges.hpp"

namespace bandbump {

namespace {

ConditionalMoments conditional(const JointDistribution& dist, Outcome outcome,
                               const ExactRational& marginal, int sd_digits) {
  ExactRational first = 0, second = 0;
  for (const auto& [n, row] : dist.rows()) {
    const ExactRational& p = outcome == Outcome::Band ? row.band : row.bump;
    first += p * n;
    second += p * (n * n);
  }
  ConditionalMoments cm;
  cm.marginal = marginal;
  cm.mean = first / marginal;
  cm.variance = second / marginal - cm.mean * cm.mean;
  cm.sd = sqrt_to_decimal(cm.variance, sd_digits);
  return cm;
}

}  // namespace

MomentsReport moments(const JointDistribution& dist, int sd_digits) {
  if (dist.total_mass() != 1) {
    throw ParameterError("moments: distribution mass is " + to_fraction_string(dist.total_mass()));
  }
  MomentsReport r;
  r.p_band = dist.marginal(Outcome::Band);
  r.p_bump = dist.marginal(Outcome::Bump);

  ExactRational first = 0, second = 0;
  for (const auto& [n, row] : dist.rows()) {
    const ExactRational p = row.total();
    first += p * n;
    second += p * (n * n);
  }
  r.mean = first;
  r.variance = second - first * first;
  r.sd = sqrt_to_decimal(r.variance, sd_digits);

  if (r.p_band != 0) {
    r.band = conditional(dist, Outcome::Band, r.p_band, sd_digits);
  } else {
    r.omitted.push_back(Outcome::Band);
  }
  if (r.p_bump != 0) {
    r.bump = conditional(dist, Outcome::Bump, r.p_bump, sd_digits);
  } else {
    r.omitted.push_back(Outcome::Bump);
  }
  return r;
}

ExactRational payoff_ev(const JointDistribution& dist, const PayoffSpec& spec) {
  if (dist.total_mass() != 1) throw ParameterError("payoff_ev: distribution mass is not 1");
  return spec.band_payoff * dist.marginal(Outcome::Band) +
         spec.bump_payoff * dist.marginal(Outcome::Bump);
}

LogConcavityVerdict log_concavity(std::span<const ExactRational> seq) {
  LogConcavityVerdict v;
  long first = -1, last = -1;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0) v.non_negative = false;
    if (seq[i] > 0) {
      if (first < 0) first = static_cast<long>(i);
      last = static_cast<long>(i);
    }
  }
  for (long i = first; first >= 0 && i <= last; ++i) {
    if (seq[static_cast<size_t>(i)] <= 0) v.consecutive_support = false;
  }
  for (size_t i = 1; i + 1 < seq.size(); ++i) {
    if (seq[i + 1] * seq[i - 1] > seq[i] * seq[i]) v.violations.push_back(i);
  }
  v.log_concave = v.non_negative && v.consecutive_support && v.violations.empty();
  return v;
}

std::vector<GameParams> ScanGrid::cells() const {
  std::vector<GameParams> out;
  for (int m = m_min; m <= m_max; ++m) {
    for (int s = s_min; s <= s_max; ++s) {
      for (int ll = 1; ll < s; ++ll) {
        for (int uu = ll + 1; uu < s; ++uu) {
          if ((l && *l != ll) || (u && *u != uu)) continue;
          out.push_back(GameParams{m, s, ll, uu});
        }
      }
    }
  }
  return out;
}

long ScanReport::total_checks() const {
  long sum = 0;
  for (const auto& c : cells) sum += c.checks;
  return sum;
}

ScanReport nonvacuity_scan(const ScanGrid& grid) {
  ScanReport report;
  report.kind = "nonvacuity";
  report.grid = grid;
  for (const GameParams& params : grid.cells()) {
    const GameEngine engine(params);
    ScanCell cell{params, 0, true};
    const IndexInterval ns = bump_n_range(params);
    for (int n = ns.lo; n <= ns.hi; ++n) {
      const BumpIndexRange range = bump_index_range(params, n);
      for (const KIndexDetail& d : range.per_k) {
        ++cell.checks;
        if (d.kpp.empty()) {
          cell.pass = false;
          report.counterexamples.push_back(
              {params, n, d.k,
               "empty k'' range [" + std::to_string(d.kpp.lo) + ", " + std::to_string(d.kpp.hi) +
                   "]"});
        }
      }
      for (const BumpTerm& term : engine.bump_terms(n)) {
        ++cell.checks;
        if (term.count <= 0) {
          cell.pass = false;
          report.counterexamples.push_back(
              {params, n, term.k, "zero summand at k''=" + std::to_string(term.k_within)});
        }
      }
    }
    report.cells.push_back(cell);
  }
  return report;
}

ScanReport logconcavity_scan(const ScanGrid& grid, Outcome outcome) {
  ScanReport report;
  report.kind = to_string(outcome) + "-logconcavity";
  report.grid = grid;
  for (const GameParams& params : grid.cells()) {
    const GameEngine engine(params);
    const int first = outcome == Outcome::Band ? params.m * params.l : params.u + 1;
    const int last = params.n_max();
    std::vector<ExactRational> seq;
    for (int n = first; n <= last; ++n) {
      seq.push_back(outcome == Outcome::Band ? engine.band_joint(n) : engine.bump_joint(n));
    }
    const LogConcavityVerdict v = log_concavity(seq);
    ScanCell cell{params, static_cast<long>(seq.size()), v.log_concave};
    if (!v.non_negative) report.counterexamples.push_back({params, 0, 0, "negative mass"});
    if (!v.consecutive_support) report.counterexamples.push_back({params, 0, 0, "support gap"});
    for (size_t i : v.violations) {
      report.counterexamples.push_back(
          {params, first + static_cast<int>(i), 0, "p[n+1] p[n-1] > p[n]^2"});
    }
    report.cells.push_back(cell);
  }
  return report;
}

ScanReport band_logconcavity_scan(const ScanGrid& grid) {
  return logconcavity_scan(grid, Outcome::Band);
}

ScanReport bump_logconcavity_scan(const ScanGrid& grid) {
  return logconcavity_scan(grid, Outcome::Bump);
}

}  // namespace bandbump
