#pragma once

// Tabular and JSON renderings of distributions and scan reports.

#include "bandbump/analysis.hpp"
#include "bandbump/game.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace bandbump {

/// Rows n, P[N=n, band], P[N=n, bump], P[N=n], P[N=n | band], P[N=n | bump],
/// followed by outcome-probability, mean and standard-deviation footers.
/// Zero and undefined cells are empty strings.
struct OutputTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const OutputTable&) const = default;
};

OutputTable build_table(const JointDistribution& dist, int digits = 6);

/// RFC 4180 style: LF line endings, fields quoted only when they contain a
/// comma, quote or newline.
std::string render_csv(const OutputTable& table);
OutputTable parse_csv(std::string_view text);

nlohmann::json exact_json(const ExactRational& x, int digits);
nlohmann::json distribution_json(const JointDistribution& dist, int digits = 6);
nlohmann::json scan_json(const ScanReport& report);

}  // namespace bandbump
