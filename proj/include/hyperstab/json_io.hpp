#pragma once

#include <string>

#include <json.hpp>

#include "hyperstab/report.hpp"

namespace hyperstab {

using Json = nlohmann::ordered_json;

// Canonical HyperState document: {"spec": "...", "n": 12, "blocks": [...]}.
Json state_to_json(const HyperState& state);
HyperState state_from_json(const Json& j);

Scenario scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& sc);

Json to_json(const CountReport& r, const std::string& command);
Json to_json(const BellReport& r, const HyperState& state);
Json to_json(const Table1Report& r);
Json to_json(const CasesReport& r);
Json to_json(const SimulateReport& r);
Json to_json(const OrderingReport& r);

std::string render_table(const CountReport& r);
std::string render_table(const BellReport& r, const HyperState& state);
std::string render_table(const Table1Report& r);
std::string render_table(const SimulateReport& r);
std::string render_table(const OrderingReport& r);

std::string cases_csv(const CasesReport& r);
std::string table1_csv(const Table1Report& r);
std::string readout_csv(const SimulateReport& r);

}  // namespace hyperstab
