#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uniformize/deformation.hpp"
#include "uniformize/generators.hpp"

namespace uniformize {

/// Names of the checks that can be switched off with `check.<name> = off`.
const std::vector<std::string>& known_checks();

/// Everything a CLI run depends on. See docs/config.md for the file grammar.
struct RunConfig {
  GeneratorSpec generator;
  std::vector<double> epsilons{0.1, 0.3, 0.5, 1.0};
  double h = 1.0 / 14.0;
  std::uint64_t seed = 1;
  std::size_t pair_sample = 5000;
  std::size_t full_pair_limit = 200;
  std::size_t arc_limit = 1;
  Quadrature quadrature = Quadrature::kExactTree;
  std::size_t delta_size_limit = 400;
  bool delta_override = false;
  /// Origin of the boundary metametric; the base point when unset.
  std::optional<std::uint32_t> origin;
  std::size_t road_stages = 4;
  /// Cap on boundary proxies (evenly spaced frontier nodes); 0 keeps all.
  std::size_t proxy_limit = 1024;
  unsigned threads = 1;
  std::string output = "out";
  std::map<std::string, bool> checks;  // every known check, true = enabled

  RunConfig();
  bool enabled(const std::string& check) const;
  bool operator==(const RunConfig&) const = default;
};

/// Sets one key from its textual value; throws Error on unknown keys or bad values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Flat `key = value` lines; '#' starts a comment line.
RunConfig parse_config(std::istream& in);
RunConfig read_config_file(const std::string& path);

/// Every key in a fixed order; parse_config(to_text(c)) == c.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& config);
std::string to_text(const RunConfig& config);

}  // namespace uniformize
