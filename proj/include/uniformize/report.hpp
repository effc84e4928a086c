#pragma once

#include <string>

#include <json.hpp>

#include "uniformize/check_record.hpp"
#include "uniformize/config.hpp"
#include "uniformize/graph.hpp"
#include "uniformize/hyperbolicity.hpp"

namespace uniformize {

inline constexpr int kReportSchemaVersion = 1;

/// Non-finite numbers become null (JSON has no infinity).
nlohmann::json to_json(const CheckRecord& record);
nlohmann::json to_json(const HyperbolicityReport& report);
nlohmann::json to_json(const RunConfig& config);
nlohmann::json graph_summary(const WeightedMetricGraph& g);

CheckRecord skipped_record(const std::string& name, const std::string& note);

}  // namespace uniformize
