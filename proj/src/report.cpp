#include "bandbump/report.hpp"

namespace bandbump {

namespace {

std::string cell(const ExactRational& x, int digits) {
  return x == 0 ? std::string() : to_decimal(x, digits);
}

std::string conditional_cell(const ExactRational& joint, const ExactRational& marginal,
                             int digits) {
  return marginal == 0 ? std::string() : cell(joint / marginal, digits);
}

nlohmann::json params_json(const GameParams& p) {
  return {{"m", p.m}, {"s", p.s}, {"l", p.l}, {"u", p.u}};
}

nlohmann::json moments_json(const std::optional<ConditionalMoments>& cm, int digits) {
  if (!cm) return nullptr;
  return {{"marginal", exact_json(cm->marginal, digits)},
          {"mean", exact_json(cm->mean, digits)},
          {"variance", exact_json(cm->variance, digits)},
          {"sd", cm->sd}};
}

}  // namespace

OutputTable build_table(const JointDistribution& dist, int digits) {
  const MomentsReport mom = moments(dist, digits);
  OutputTable table;
  table.header = {"n", "P[N=n, band]", "P[N=n, bump]", "P[N=n]", "P[N=n | band]",
                  "P[N=n | bump]"};
  for (const auto& [n, row] : dist.rows()) {
    table.rows.push_back({std::to_string(n), cell(row.band, digits), cell(row.bump, digits),
                          cell(row.total(), digits),
                          conditional_cell(row.band, mom.p_band, digits),
                          conditional_cell(row.bump, mom.p_bump, digits)});
  }
  table.rows.push_back({"Outcome probabilities", cell(mom.p_band, digits),
                        cell(mom.p_bump, digits), "", "", ""});
  table.rows.push_back({"Mean duration", "", "", to_decimal(mom.mean, digits),
                        mom.band ? to_decimal(mom.band->mean, digits) : "",
                        mom.bump ? to_decimal(mom.bump->mean, digits) : ""});
  table.rows.push_back({"Standard deviation", "", "", mom.sd, mom.band ? mom.band->sd : "",
                        mom.bump ? mom.bump->sd : ""});
  return table;
}

std::string render_csv(const OutputTable& table) {
  auto field = [](const std::string& f) {
    if (f.find_first_of(",\"\n") == std::string::npos) return f;
    std::string quoted = "\"";
    for (char c : f) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  };
  auto line = [&](const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += field(fields[i]);
    }
    return out + "\n";
  };
  std::string out = line(table.header);
  for (const auto& row : table.rows) out += line(row);
  return out;
}

OutputTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw ParameterError("parse_csv: unterminated quoted field");
  if (!field.empty() || !record.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }

  OutputTable table;
  if (records.empty()) return table;
  table.header = std::move(records.front());
  table.rows.assign(std::make_move_iterator(records.begin() + 1),
                    std::make_move_iterator(records.end()));
  return table;
}

nlohmann::json exact_json(const ExactRational& x, int digits) {
  return {{"exact", to_fraction_string(x)}, {"decimal", to_decimal(x, digits)}};
}

nlohmann::json distribution_json(const JointDistribution& dist, int digits) {
  const MomentsReport mom = moments(dist, digits);
  const GameParams& p = dist.params();
  nlohmann::json params = params_json(p);
  params["t"] = p.t();
  params["n_max"] = p.n_max();

  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [n, row] : dist.rows()) {
    rows.push_back({
        {"n", n},
        {"p_band", exact_json(row.band, digits)},
        {"p_bump", exact_json(row.bump, digits)},
        {"p_total", exact_json(row.total(), digits)},
        {"p_n_given_band",
         mom.p_band == 0 ? nlohmann::json(nullptr) : exact_json(row.band / mom.p_band, digits)},
        {"p_n_given_bump",
         mom.p_bump == 0 ? nlohmann::json(nullptr) : exact_json(row.bump / mom.p_bump, digits)},
    });
  }

  return {
      {"params", params},
      {"digits", digits},
      {"rows", rows},
      {"footer",
       {{"p_band", exact_json(mom.p_band, digits)},
        {"p_bump", exact_json(mom.p_bump, digits)},
        {"mean", exact_json(mom.mean, digits)},
        {"variance", exact_json(mom.variance, digits)},
        {"sd", mom.sd},
        {"band", moments_json(mom.band, digits)},
        {"bump", moments_json(mom.bump, digits)}}},
  };
}

nlohmann::json scan_json(const ScanReport& report) {
  nlohmann::json grid = {{"m_min", report.grid.m_min},
                         {"m_max", report.grid.m_max},
                         {"s_min", report.grid.s_min},
                         {"s_max", report.grid.s_max}};
  grid["l"] = report.grid.l ? nlohmann::json(*report.grid.l) : nlohmann::json(nullptr);
  grid["u"] = report.grid.u ? nlohmann::json(*report.grid.u) : nlohmann::json(nullptr);

  nlohmann::json cells = nlohmann::json::array();
  for (const ScanCell& c : report.cells) {
    nlohmann::json j = params_json(c.params);
    j["checks"] = c.checks;
    j["pass"] = c.pass;
    cells.push_back(std::move(j));
  }
  nlohmann::json counterexamples = nlohmann::json::array();
  for (const Counterexample& c : report.counterexamples) {
    nlohmann::json j = params_json(c.params);
    j["n"] = c.n;
    j["k"] = c.k;
    j["detail"] = c.detail;
    counterexamples.push_back(std::move(j));
  }
  return {{"kind", report.kind},
          {"grid", grid},
          {"cells", cells},
          {"total_checks", report.total_checks()},
          {"counterexamples", counterexamples},
          {"clean", report.clean()}};
}

}  // namespace bandbump
