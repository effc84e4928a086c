#include "uniformize/report.hpp"

#include <cmath>

namespace uniformize {

namespace {
nlohmann::json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}
}  // namespace

nlohmann::json to_json(const CheckRecord& record) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [key, value] : record.values) values[key] = number(value);
  nlohmann::json witnesses = nlohmann::json::object();
  for (const auto& [key, nodes] : record.witnesses) witnesses[key] = nodes;
  return {{"name", record.name},     {"status", to_string(record.status)}, {"vacuous", record.vacuous},
          {"note", record.note},     {"values", values},                  {"witnesses", witnesses}};
}

nlohmann::json to_json(const HyperbolicityReport& report) {
  const auto& w = report.witness;
  nlohmann::json out{{"mode", report.mode == DeltaMode::kGlobal ? "global" : "base-point"},
                     {"delta_base", number(report.delta_base)},
                     {"witness", {w.x, w.y, w.z, w.p}},
                     {"largest_block", report.largest_block}};
  out["delta_global"] = report.delta_global ? number(*report.delta_global) : nlohmann::json(nullptr);
  return out;
}

nlohmann::json to_json(const RunConfig& config) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, value] : config_entries(config)) out[key] = value;
  return out;
}

nlohmann::json graph_summary(const WeightedMetricGraph& g) {
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [key, value] : g.metadata().params) meta[key] = value;
  return {{"generator", g.metadata().generator},
          {"nodes", g.size()},
          {"edges", g.edges().size()},
          {"base", g.base()},
          {"frontier_size", g.frontier().size()},
          {"metadata", meta}};
}

CheckRecord skipped_record(const std::string& name, const std::string& note) {
  CheckRecord rec{.name = name, .status = CheckStatus::kSkipped};
  rec.note = note;
  return rec;
}

}  // namespace uniformize
