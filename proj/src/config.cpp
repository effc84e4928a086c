#include "uniformize/config.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "uniformize/error.hpp"
#include "uniformize/format.hpp"

namespace uniformize {

namespace {

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw Error("config: bad value '" + value + "' for '" + key + "'");
}

double to_double(const std::string& key, const std::string& value) {
  auto v = parse_double(value);
  if (!v) bad_value(key, value);
  return *v;
}

template <class Int>
Int to_int(const std::string& key, const std::string& value) {
  auto v = parse_int<Int>(value);
  if (!v) bad_value(key, value);
  return *v;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "on" || value == "true" || value == "1") return true;
  if (value == "off" || value == "false" || value == "0") return false;
  bad_value(key, value);
}

template <class Kind>
Kind& kind_for(RunConfig& config, const std::string& key) {
  auto* kind = std::get_if<Kind>(&config.generator.kind);
  if (!kind) throw Error("config: '" + key + "' does not apply to generator " + generator_name(config.generator));
  return *kind;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{
      "tripod",          "lemma_2_10",       "harnack",        "diameter",
      "local_bilipschitz", "boundary_lower_bound", "incompleteness_cauchy", "uniformity",
      "gehring_hayman",  "road",             "road_concatenation", "lemma_3_3",
      "metametric_sandwich", "boundary_quasi_isometry", "gromov_to_cauchy"};
  return names;
}

RunConfig::RunConfig() {
  for (const auto& name : known_checks()) checks[name] = true;
}

bool RunConfig::enabled(const std::string& check) const {
  auto it = checks.find(check);
  return it != checks.end() && it->second;
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "generator") {
    if (value == "regular-tree") {
      config.generator.kind = RegularTree{};
    } else if (value == "hyperbolic-tiling") {
      config.generator.kind = HyperbolicTiling{};
    } else if (value == "euclidean-grid") {
      config.generator.kind = EuclideanGrid{};
    } else if (value == "random-gnp") {
      config.generator.kind = RandomGnp{};
    } else {
      bad_value(key, value);
    }
  } else if (key == "branching") {
    kind_for<RegularTree>(config, key).branching = to_int<int>(key, value);
  } else if (key == "radius") {
    kind_for<RegularTree>(config, key).radius = to_int<int>(key, value);
  } else if (key == "p") {
    kind_for<HyperbolicTiling>(config, key).p = to_int<int>(key, value);
  } else if (key == "q") {
    kind_for<HyperbolicTiling>(config, key).q = to_int<int>(key, value);
  } else if (key == "rings") {
    kind_for<HyperbolicTiling>(config, key).rings = to_int<int>(key, value);
  } else if (key == "n") {
    if (auto* grid = std::get_if<EuclideanGrid>(&config.generator.kind)) {
      grid->n = to_int<int>(key, value);
    } else {
      kind_for<RandomGnp>(config, key).n = to_int<int>(key, value);
    }
  } else if (key == "prob") {
    kind_for<RandomGnp>(config, key).prob = to_double(key, value);
  } else if (key == "graph_seed") {
    kind_for<RandomGnp>(config, key).seed = to_int<std::uint64_t>(key, value);
  } else if (key == "edge_length") {
    config.generator.edge_length = to_double(key, value);
    if (!(config.generator.edge_length > 0.0)) bad_value(key, value);
  } else if (key == "subdivision") {
    config.generator.subdivision = to_int<int>(key, value);
    if (config.generator.subdivision < 1) bad_value(key, value);
  } else if (key == "epsilon") {
    std::vector<double> list;
    std::stringstream items(value);
    std::string item;
    while (std::getline(items, item, ',')) {
      const double eps = to_double(key, trim(item));
      if (!(eps > 0.0)) bad_value(key, value);
      list.push_back(eps);
    }
    if (list.empty()) bad_value(key, value);
    config.epsilons = std::move(list);
  } else if (key == "h") {
    config.h = to_double(key, value);
    if (!(config.h >= 0.0)) bad_value(key, value);
  } else if (key == "seed") {
    config.seed = to_int<std::uint64_t>(key, value);
  } else if (key == "pair_sample") {
    config.pair_sample = to_int<std::size_t>(key, value);
  } else if (key == "full_pair_limit") {
    config.full_pair_limit = to_int<std::size_t>(key, value);
  } else if (key == "arc_limit") {
    config.arc_limit = to_int<std::size_t>(key, value);
    if (config.arc_limit == 0) bad_value(key, value);
  } else if (key == "quadrature") {
    auto q = parse_quadrature(value);
    if (!q) bad_value(key, value);
    config.quadrature = *q;
  } else if (key == "delta_size_limit") {
    config.delta_size_limit = to_int<std::size_t>(key, value);
  } else if (key == "delta_override") {
    config.delta_override = to_bool(key, value);
  } else if (key == "origin") {
    if (value == "base") {
      config.origin.reset();
    } else {
      config.origin = to_int<std::uint32_t>(key, value);
    }
  } else if (key == "road_stages") {
    config.road_stages = to_int<std::size_t>(key, value);
    if (config.road_stages == 0) bad_value(key, value);
  } else if (key == "proxy_limit") {
    config.proxy_limit = to_int<std::size_t>(key, value);
  } else if (key == "threads") {
    config.threads = to_int<unsigned>(key, value);
  } else if (key == "output") {
    if (value.empty()) bad_value(key, value);
    config.output = value;
  } else if (key.rfind("check.", 0) == 0) {
    const auto name = key.substr(6);
    auto it = config.checks.find(name);
    if (it == config.checks.end()) throw Error("config: unknown check '" + name + "'");
    it->second = to_bool(key, value);
  } else {
    throw Error("config: unknown key '" + key + "'");
  }
}

RunConfig parse_config(std::istream& in) {
  RunConfig config;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw Error("config line " + std::to_string(number) + ": expected 'key = value'");
    apply_setting(config, trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
  }
  return config;
}

RunConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& c) {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("generator", generator_name(c.generator));
  std::visit(
      [&](const auto& kind) {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, RegularTree>) {
          out.emplace_back("branching", std::to_string(kind.branching));
          out.emplace_back("radius", std::to_string(kind.radius));
        } else if constexpr (std::is_same_v<T, HyperbolicTiling>) {
          out.emplace_back("p", std::to_string(kind.p));
          out.emplace_back("q", std::to_string(kind.q));
          out.emplace_back("rings", std::to_string(kind.rings));
        } else if constexpr (std::is_same_v<T, EuclideanGrid>) {
          out.emplace_back("n", std::to_string(kind.n));
        } else {
          out.emplace_back("n", std::to_string(kind.n));
          out.emplace_back("prob", format_double(kind.prob));
          out.emplace_back("graph_seed", std::to_string(kind.seed));
        }
      },
      c.generator.kind);
  out.emplace_back("edge_length", format_double(c.generator.edge_length));
  out.emplace_back("subdivision", std::to_string(c.generator.subdivision));
  std::string eps;
  for (std::size_t i = 0; i < c.epsilons.size(); ++i) eps += (i ? ", " : "") + format_double(c.epsilons[i]);
  out.emplace_back("epsilon", eps);
  out.emplace_back("h", format_double(c.h));
  out.emplace_back("seed", std::to_string(c.seed));
  out.emplace_back("pair_sample", std::to_string(c.pair_sample));
  out.emplace_back("full_pair_limit", std::to_string(c.full_pair_limit));
  out.emplace_back("arc_limit", std::to_string(c.arc_limit));
  out.emplace_back("quadrature", to_string(c.quadrature));
  out.emplace_back("delta_size_limit", std::to_string(c.delta_size_limit));
  out.emplace_back("delta_override", c.delta_override ? "on" : "off");
  out.emplace_back("origin", c.origin ? std::to_string(*c.origin) : "base");
  out.emplace_back("road_stages", std::to_string(c.road_stages));
  out.emplace_back("proxy_limit", std::to_string(c.proxy_limit));
  out.emplace_back("threads", std::to_string(c.threads));
  out.emplace_back("output", c.output);
  for (const auto& [name, on] : c.checks) out.emplace_back("check." + name, on ? "on" : "off");
  return out;
}

std::string to_text(const RunConfig& config) {
  std::string text;
  for (const auto& [key, value] : config_entries(config)) text += key + " = " + value + "\n";
  return text;
}

}  // namespace uniformize
