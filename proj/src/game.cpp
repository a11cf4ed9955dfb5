#include "bandbump/game.hpp"

#include <set>

namespace bandbump {

std::string to_string(Outcome o) { return o == Outcome::Band ? "band" : "bump"; }

void GameParams::validate() const {
  if (m < 1) throw ParameterError("m must be >= 1 (got " + std::to_string(m) + ")");
  if (s < 1) throw ParameterError("s must be >= 1 (got " + std::to_string(s) + ")");
  if (l < 0 || l > u || u > s) {
    throw ParameterError("quotas must satisfy 0 <= l <= u <= s (got l=" + std::to_string(l) +
                         ", u=" + std::to_string(u) + ", s=" + std::to_string(s) + ")");
  }
}

GameCase GameParams::classify() const {
  validate();
  if (l == 0 && u == 0) return GameCase::BumpAtFirstDraw;
  if (l == 0) return GameCase::BandAtFirstDraw;
  if (u == s) return GameCase::CouponCollector;
  if (l == u) return GameCase::EqualQuota;
  return GameCase::General;
}

std::string GameParams::describe() const {
  return "m=" + std::to_string(m) + " s=" + std::to_string(s) + " l=" + std::to_string(l) +
         " u=" + std::to_string(u);
}

void JointDistribution::set(int n, ExactRational band, ExactRational bump) {
  rows_[n] = JointRow{std::move(band), std::move(bump)};
}

void JointDistribution::add(int n, Outcome outcome, const ExactRational& mass) {
  auto& row = rows_[n];
  (outcome == Outcome::Band ? row.band : row.bump) += mass;
}

ExactRational JointDistribution::mass(int n, Outcome outcome) const {
  auto it = rows_.find(n);
  if (it == rows_.end()) return 0;
  return outcome == Outcome::Band ? it->second.band : it->second.bump;
}

ExactRational JointDistribution::total(int n) const {
  auto it = rows_.find(n);
  return it == rows_.end() ? ExactRational(0) : it->second.total();
}

ExactRational JointDistribution::marginal(Outcome outcome) const {
  ExactRational sum = 0;
  for (const auto& [n, row] : rows_) sum += outcome == Outcome::Band ? row.band : row.bump;
  return sum;
}

ExactRational JointDistribution::total_mass() const {
  ExactRational sum = 0;
  for (const auto& [n, row] : rows_) sum += row.total();
  return sum;
}

std::vector<ExactRational> JointDistribution::sequence(Outcome outcome, int first,
                                                       int last) const {
  std::vector<ExactRational> out;
  for (int n = first; n <= last; ++n) out.push_back(mass(n, outcome));
  return out;
}

std::optional<int> first_mismatch(const JointDistribution& a, const JointDistribution& b) {
  std::set<int> keys;
  for (const auto& [n, row] : a.rows()) keys.insert(n);
  for (const auto& [n, row] : b.rows()) keys.insert(n);
  for (int n : keys) {
    if (a.mass(n, Outcome::Band) != b.mass(n, Outcome::Band) ||
        a.mass(n, Outcome::Bump) != b.mass(n, Outcome::Bump)) {
      return n;
    }
  }
  return std::nullopt;
}

bool same_masses(const JointDistribution& a, const JointDistribution& b) {
  return a.params() == b.params() && !first_mismatch(a, b).has_value();
}

}  // namespace bandbump
