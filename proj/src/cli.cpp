#include "uniformize/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uniformize/boundary.hpp"
#include "uniformize/config.hpp"
#include "uniformize/error.hpp"
#include "uniformize/format.hpp"
#include "uniformize/generators.hpp"
#include "uniformize/graph_io.hpp"
#include "uniformize/hyperbolic_checks.hpp"
#include "uniformize/hyperbolicity.hpp"
#include "uniformize/parallel.hpp"
#include "uniformize/report.hpp"
#include "uniformize/sampling.hpp"
#include "uniformize/uniformity.hpp"

namespace uniformize {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Flags {
  std::string config_path;
  std::string graph_path;
  std::vector<std::string> sets;
  std::vector<std::string> eps;
  std::string h, seed, threads, out, quadrature;
};

struct DeltaInfo {
  HyperbolicityReport report;
  double value = 0.0;
  std::string source;
};

struct Session {
  RunConfig config;
  std::string command;
  std::shared_ptr<const WeightedMetricGraph> graph;
  std::shared_ptr<const DistanceTable> dist;
  bool control = false;
  DeltaInfo delta;
  fs::path out;
  int failures = 0;
  json summary = {{"PASS", 0}, {"FAIL", 0}, {"SKIPPED", 0}, {"INFO", 0}};
};

RunConfig build_config(const Flags& flags) {
  RunConfig config = flags.config_path.empty() ? RunConfig{} : read_config_file(flags.config_path);
  for (const auto& entry : flags.sets) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw Error("--set expects key=value, got '" + entry + "'");
    apply_setting(config, entry.substr(0, eq), entry.substr(eq + 1));
  }
  if (!flags.eps.empty()) {
    std::string joined;
    for (const auto& e : flags.eps) joined += (joined.empty() ? "" : ",") + e;
    apply_setting(config, "epsilon", joined);
  }
  if (!flags.h.empty()) apply_setting(config, "h", flags.h);
  if (!flags.seed.empty()) apply_setting(config, "seed", flags.seed);
  if (!flags.threads.empty()) apply_setting(config, "threads", flags.threads);
  if (!flags.out.empty()) apply_setting(config, "output", flags.out);
  if (!flags.quadrature.empty()) apply_setting(config, "quadrature", flags.quadrature);
  return config;
}

std::shared_ptr<const WeightedMetricGraph> load_graph(const RunConfig& config, const std::string& graph_path) {
  if (!graph_path.empty()) return std::make_shared<const WeightedMetricGraph>(read_graph_file(graph_path));
  return std::make_shared<const WeightedMetricGraph>(generate(config.generator));
}

DeltaInfo measure_delta(const WeightedMetricGraph& g, const RunConfig& config) {
  const DeltaOptions options{config.delta_size_limit, config.delta_override};
  std::size_t largest = 0;
  for (const auto& block : biconnected_blocks(g)) largest = std::max(largest, block.size());
  DeltaInfo info;
  if (largest <= config.delta_size_limit || config.delta_override) {
    info.report = estimate_delta(g, DeltaMode::kGlobal, options);
    info.value = *info.report.delta_global;
    info.source = "global";
  } else {
    // delta <= 2 delta_p for any base point p.
    info.report = estimate_delta(g, DeltaMode::kBasePoint, options);
    info.value = 2.0 * info.report.delta_base;
    info.source = "twice the base-point value (global scan over the size limit)";
  }
  return info;
}

std::string eps_label(double eps) { return format_double(eps); }

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

void write_json(const fs::path& path, const json& value) { write_text(path, value.dump(2) + "\n"); }

void write_csv(const fs::path& path, const std::string& header, const std::vector<std::string>& rows) {
  std::string text = header + "\n";
  for (const auto& row : rows) text += row + "\n";
  write_text(path, text);
}

void write_header(const Session& s) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &utc);
  write_json(s.out / "header.json",
             {{"schema_version", kReportSchemaVersion}, {"command", s.command}, {"timestamp", stamp}});
}

json record(Session& s, const CheckRecord& rec, const std::string& scope) {
  s.summary[to_string(rec.status)] = s.summary[to_string(rec.status)].get<int>() + 1;
  if (rec.status == CheckStatus::kFail) ++s.failures;
  std::cout << '[' << to_string(rec.status) << "] " << scope << rec.name;
  if (!rec.note.empty()) std::cout << " (" << rec.note << ')';
  std::cout << '\n';
  return to_json(rec);
}

std::pair<NodeId, NodeId> far_endpoints(const Session& s) {
  const auto& g = *s.graph;
  if (g.frontier().size() >= 2) return {g.frontier().front(), g.frontier().back()};
  NodeId first = 0, second = 0;
  double best = -1.0, next = -1.0;
  for (NodeId x = 0; x < g.size(); ++x) {
    const double d = (*s.dist)(g.base(), x);
    if (d > best) {
      second = first;
      next = best;
      first = x;
      best = d;
    } else if (d > next) {
      second = x;
      next = d;
    }
  }
  return {first, second};
}

NodeId boundary_origin(const Session& s) {
  const NodeId origin = s.config.origin.value_or(s.graph->base());
  if (origin >= s.graph->size()) throw Error("origin " + std::to_string(origin) + " is not a node");
  return origin;
}

std::vector<NodeId> ray_from(const Session& s, NodeId origin, NodeId target) {
  const auto arc = shortest_arc(*s.graph, *s.dist, origin, target);
  return {arc.nodes().begin(), arc.nodes().end()};
}

json metric_checks(Session& s) {
  json out = json::array();
  const auto& g = *s.graph;
  const auto [b1, b2] = far_endpoints(s);
  if (s.config.enabled("tripod")) {
    out.push_back(record(s, verify_tripod(g, *s.dist, s.delta.value, s.config.h, g.base(), b1, b2, 4), ""));
  }
  if (s.config.enabled("lemma_2_10")) {
    const auto arc = shortest_arc(g, *s.dist, b1, b2);
    out.push_back(record(s, verify_lemma_2_10(*s.dist, s.delta.value, s.config.h, arc, g.base()), ""));
  }
  return out;
}

json road_checks(Session& s) {
  json out = json::array();
  const bool want_road = s.config.enabled("road");
  const bool want_concat = s.config.enabled("road_concatenation");
  if (!want_road && !want_concat) return out;
  const auto& g = *s.graph;
  const NodeId origin = boundary_origin(s);
  NodeId direction = origin;
  for (NodeId f : g.frontier()) {
    if (f != origin) {
      direction = f;
      break;
    }
  }
  if (direction == origin) {
    if (want_road) out.push_back(record(s, skipped_record("road", "no frontier direction"), ""));
    if (want_concat) out.push_back(record(s, skipped_record("road_concatenation", "no frontier direction"), ""));
    return out;
  }
  const std::size_t edges = shortest_arc(g, *s.dist, origin, direction).size() - 1;
  const Road road = build_road(g, *s.dist, origin, direction, std::min(s.config.road_stages, edges));
  if (want_road) out.push_back(record(s, check_road(road, s.delta.value), ""));
  if (want_concat) {
    CheckRecord agg{.name = "road_concatenation"};
    MaxRatio worst;
    std::size_t pairs = 0;
    for (std::size_t n = 0; n < road.arcs.size(); ++n) {
      for (std::size_t m = n; m < road.arcs.size(); ++m) {
        ++pairs;
        try {
          const auto rec = check_road_concatenation(g, *s.dist, road, n, m);
          worst.update(rec.value("k_emp"), {static_cast<NodeId>(n), static_cast<NodeId>(m)});
          agg.require(rec.passed());
        } catch (const Error& e) {
          agg.require(false);
          agg.note = e.what();
        }
      }
    }
    agg.values["max_k_emp"] = worst.value;
    agg.values["bound"] = 3.0 * road.mu + 3.0 * road.h;
    agg.values["mu"] = road.mu;
    agg.values["index_pairs"] = static_cast<double>(pairs);
    agg.witnesses["max_k_emp_indices"] = worst.witness;
    out.push_back(record(s, agg, ""));
  }
  return out;
}

json deformation_checks(Session& s, const DeformedSpace& ds, const std::string& scope) {
  json out = json::array();
  const auto& g = *s.graph;
  if (s.config.enabled("harnack")) out.push_back(record(s, check_harnack(ds), scope));
  if (s.config.enabled("diameter")) out.push_back(record(s, check_diameter(ds), scope));
  if (s.config.enabled("local_bilipschitz")) out.push_back(record(s, check_local_bilipschitz(ds, g.base()), scope));
  if (s.config.enabled("boundary_lower_bound")) {
    out.push_back(record(s,
                         g.frontier().empty() ? skipped_record("boundary_lower_bound", "no boundary proxy")
                                              : check_boundary_lower_bound(ds),
                         scope));
  }
  if (s.config.enabled("incompleteness_cauchy")) {
    std::vector<NodeId> ray;
    if (!g.frontier().empty()) ray = radial_ray(g, *s.dist, g.frontier().front());
    out.push_back(record(s,
                         ray.size() < 3 ? skipped_record("incompleteness_cauchy", "no ray of 3 nodes to the frontier")
                                        : check_incompleteness_cauchy(ds, ray),
                         scope));
  }
  return out;
}

PairSamplingOptions sampling(const Session& s, bool inner) {
  PairSamplingOptions options;
  options.full_limit = s.config.full_pair_limit;
  options.sample_size = s.config.pair_sample;
  options.seed = s.config.seed;
  options.inner_only = inner;
  return options;
}

json uniformity_checks(Session& s, const DeformedSpace& ds, const std::string& scope) {
  json out = json::array();
  const auto& g = *s.graph;
  const std::string tag = eps_label(ds.epsilon());
  if (s.config.enabled("uniformity")) {
    const auto pairs = sample_pairs(g, *s.dist, sampling(s, true));
    if (g.frontier().empty()) {
      out.push_back(record(s, skipped_record("uniformity", "no boundary proxy"), scope));
    } else if (pairs.empty()) {
      out.push_back(record(s, skipped_record("uniformity", "no inner pairs"), scope));
    } else {
      const auto report = verify_uniform(
          ds, pairs, {.h = s.config.h, .arc_limit = s.config.arc_limit, .delta = s.delta.value, .informational = s.control});
      std::vector<std::string> rows;
      for (const auto& row : report.rows) {
        if (row.degenerate) continue;
        rows.push_back(std::to_string(row.x) + "," + std::to_string(row.y) + "," + format_double(row.quasiconvex) + "," +
                       format_double(row.cone_near) + "," + format_double(row.cone_far) + "," +
                       std::to_string(row.cone_witness));
      }
      write_csv(s.out / ("uniformity_eps" + tag + ".csv"), "x,y,quasiconvex,cone_near,cone_far,cone_witness", rows);
      out.push_back(record(s, report.record, scope));
    }
  }
  if (s.config.enabled("gehring_hayman")) {
    const auto pairs = sample_pairs(g, *s.dist, sampling(s, false));
    if (pairs.empty()) {
      out.push_back(record(s, skipped_record("gehring_hayman", "single-node graph"), scope));
    } else {
      auto report = verify_gehring_hayman(ds, pairs, s.config.h, s.config.arc_limit);
      if (s.control && report.record.status == CheckStatus::kPass) {
        report.record.status = CheckStatus::kInfo;
        report.record.note = "control space: no hyperbolicity assumption";
      }
      std::vector<std::string> rows;
      for (const auto& row : report.rows) {
        rows.push_back(std::to_string(row.x) + "," + std::to_string(row.y) + "," + format_double(row.ratio));
      }
      write_csv(s.out / ("gehring_hayman_eps" + tag + ".csv"), "x,y,ratio", rows);
      out.push_back(record(s, report.record, scope));
    }
  }
  return out;
}

json boundary_checks(Session& s, const DeformedSpace& ds, const std::string& scope) {
  json out = json::array();
  const auto& g = *s.graph;
  const double eps = ds.epsilon();
  const std::string tag = eps_label(eps);
  const bool gate = eps * s.delta.value < 0.2;
  const std::string gate_note = "eps * delta >= 1/5";

  double lemma_c = 1.0;
  if (s.config.enabled("lemma_3_3") || s.config.enabled("gromov_to_cauchy")) {
    const auto pairs = sample_pairs(g, *s.dist, sampling(s, true));
    if (pairs.empty()) {
      if (s.config.enabled("lemma_3_3")) out.push_back(record(s, skipped_record("lemma_3_3", "no inner pairs"), scope));
    } else {
      const auto report = check_lemma_3_3(ds, pairs, s.delta.value);
      lemma_c = std::max(1.0, report.c_emp);
      if (s.config.enabled("lemma_3_3")) {
        std::vector<std::string> rows;
        for (const auto& row : report.rows) {
          rows.push_back(std::to_string(row.x) + "," + std::to_string(row.y) + "," + format_double(row.ratio) + "," +
                         (row.near_branch ? "near" : "far"));
        }
        write_csv(s.out / ("lemma33_eps" + tag + ".csv"), "x,y,ratio,branch", rows);
        out.push_back(record(s, report.record, scope));
      }
    }
  }

  const bool want_proxies = s.config.enabled("metametric_sandwich") || s.config.enabled("boundary_quasi_isometry");
  const bool want_rays = s.config.enabled("gromov_to_cauchy");
  std::string blocked;
  if (g.frontier().empty()) blocked = "no boundary proxy";
  if (!gate) blocked = gate_note;
  if (!blocked.empty()) {
    for (const char* name : {"metametric_sandwich", "boundary_quasi_isometry", "gromov_to_cauchy"}) {
      if (s.config.enabled(name)) out.push_back(record(s, skipped_record(name, blocked), scope));
    }
    return out;
  }

  const NodeId origin = boundary_origin(s);
  if (want_proxies) {
    const auto proxies = build_boundary_proxies(ds, origin, s.delta.value, s.config.proxy_limit);
    if (s.config.enabled("metametric_sandwich")) {
      auto rec = check_metametric_sandwich(proxies);
      // theta / tau in ten bins over [1/2, 1].
      std::vector<int> bins(10, 0);
      for (std::size_t i = 0; i < proxies.size(); ++i) {
        for (std::size_t j = 0; j < proxies.size(); ++j) {
          if (i == j) continue;
          const double r = proxies.theta_at(i, j) / proxies.tau_at(i, j);
          const int bin = std::clamp(static_cast<int>((r - 0.5) * 20.0), 0, 9);
          ++bins[static_cast<std::size_t>(bin)];
        }
      }
      for (std::size_t b = 0; b < bins.size(); ++b) {
        rec.values["theta_over_tau_bin_" + std::to_string(b)] = bins[b];
      }
      out.push_back(record(s, rec, scope));
    }
    if (s.config.enabled("boundary_quasi_isometry")) {
      if (proxies.size() < 2) {
        out.push_back(record(s, skipped_record("boundary_quasi_isometry", "fewer than two proxies"), scope));
      } else {
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < proxies.size(); ++i) {
          for (std::size_t j = i + 1; j < proxies.size(); ++j) {
            rows.push_back(std::to_string(proxies.proxies[i]) + "," + std::to_string(proxies.proxies[j]) + "," +
                           format_double(proxies.tau_at(i, j)) + "," + format_double(proxies.theta_at(i, j)) + "," +
                           format_double(ds.distance(proxies.proxies[i], proxies.proxies[j])));
          }
        }
        write_csv(s.out / ("boundary_pairs_eps" + tag + ".csv"), "x,y,tau,theta,d_eps", rows);
        out.push_back(record(s, check_boundary_quasi_isometry(ds, proxies), scope));
      }
    }
  }
  if (want_rays) {
    const auto u = ray_from(s, origin, g.frontier().front());
    if (u.size() < 5) {
      out.push_back(record(s, skipped_record("gromov_to_cauchy", "ray to the frontier is shorter than 5 nodes"), scope));
    } else {
      const std::vector<NodeId> shifted(u.begin() + 2, u.end());
      auto rec = check_gromov_to_cauchy(ds, origin, u, shifted, lemma_c);
      rec.name = "gromov_to_cauchy_shifted";
      out.push_back(record(s, rec, scope));
      const auto v = ray_from(s, origin, g.frontier().back());
      if (v.size() >= 3 && g.frontier().back() != g.frontier().front()) {
        auto far = check_gromov_to_cauchy(ds, origin, u, v, lemma_c);
        far.name = "gromov_to_cauchy_far";
        out.push_back(record(s, far, scope));
      }
    }
  }
  return out;
}

json base_report(const Session& s) {
  return {{"schema_version", kReportSchemaVersion},
          {"command", s.command},
          {"config", to_json(s.config)},
          {"config_text", to_text(s.config)},
          {"graph", graph_summary(*s.graph)},
          {"delta", {{"report", to_json(s.delta.report)}, {"value", s.delta.value}, {"source", s.delta.source}}}};
}

int finish(Session& s, json report, const std::string& name) {
  report["summary"] = s.summary;
  report["status"] = s.failures ? "FAIL" : "PASS";
  write_json(s.out / (name + ".json"), report);
  write_header(s);
  std::cout << "summary: " << s.summary.dump() << " -> " << (s.out / (name + ".json")).string() << '\n';
  return s.failures ? 1 : 0;
}

int run_command(const std::string& command, const RunConfig& config, const std::string& graph_path) {
  set_thread_count(config.threads);
  Session s;
  s.config = config;
  s.command = command;
  s.out = config.output;
  fs::create_directories(s.out);

  if (command == "gen") {
    const auto g = load_graph(config, graph_path);
    std::ostringstream text;
    write_graph(text, *g);
    write_text(s.out / "graph.txt", text.str());
    write_header(s);
    std::cout << "wrote " << (s.out / "graph.txt").string() << " (" << g->size() << " nodes, " << g->edges().size()
              << " edges)\n";
    return 0;
  }

  s.graph = load_graph(config, graph_path);
  s.dist = std::make_shared<const DistanceTable>(all_pairs_distance(*s.graph));
  const auto& generator = s.graph->metadata().generator;
  s.control = generator == "euclidean-grid" || generator == "random-gnp";
  s.delta = measure_delta(*s.graph, config);
  if ((command == "verify-gh" || command == "verify-all") && config.enabled("gehring_hayman") &&
      !(config.h < 1.0 / 13.0)) {
    throw Error("the Gehring-Hayman check needs h < 1/13");
  }

  json report = base_report(s);
  if (command == "delta") {
    report["checks"] = metric_checks(s);
    return finish(s, report, "delta");
  }

  json runs = json::array();
  if (command == "boundary-compare" || command == "verify-all") {
    json checks = command == "verify-all" ? metric_checks(s) : json::array();
    for (auto& item : road_checks(s)) checks.push_back(item);
    report["checks"] = checks;
  }
  for (double eps : config.epsilons) {
    DeformationParams params;
    params.epsilon = eps;
    params.h = config.h;
    params.quadrature = config.quadrature;
    params.policy = epsilon_policy(eps, s.delta.value);
    const DeformedSpace ds(s.graph, s.dist, params);
    const std::string scope = "eps=" + eps_label(eps) + " ";
    json run{{"epsilon", eps},
             {"policy",
              {{"delta", params.policy->delta},
               {"epsilon_bound", params.policy->epsilon_bound},
               {"satisfied", params.policy->satisfied}}}};
    json checks = json::array();
    auto append = [&](json items) {
      for (auto& item : items) checks.push_back(std::move(item));
    };
    if (command == "deform" || command == "verify-all") append(deformation_checks(s, ds, scope));
    if (command == "deform") {
      std::ostringstream text;
      write_deformed(text, ds);
      write_text(s.out / ("deformed_eps" + eps_label(eps) + ".txt"), text.str());
    }
    if (command == "verify-uniform" || command == "verify-gh" || command == "verify-all") {
      RunConfig scoped = s.config;
      if (command == "verify-uniform") scoped.checks["gehring_hayman"] = false;
      if (command == "verify-gh") scoped.checks["uniformity"] = false;
      std::swap(s.config, scoped);
      append(uniformity_checks(s, ds, scope));
      std::swap(s.config, scoped);
    }
    if (command == "boundary-compare" || command == "verify-all") append(boundary_checks(s, ds, scope));
    run["checks"] = checks;
    runs.push_back(run);
  }
  report["runs"] = runs;
  std::string name = command == "verify-all" ? "report" : command;
  std::replace(name.begin(), name.end(), '-', '_');
  return finish(s, report, name);
}

void add_common_options(CLI::App* sub, Flags& flags) {
  sub->add_option("--config", flags.config_path, "Run config file (flat key = value)");
  sub->add_option("--graph", flags.graph_path, "Read the graph from a file instead of generating it");
  sub->add_option("--set", flags.sets, "Override one config key (key=value); repeatable");
  sub->add_option("--eps", flags.eps, "Epsilon values (comma separated or repeated)");
  sub->add_option("--h", flags.h, "Shortness slack h");
  sub->add_option("--seed", flags.seed, "Seed for pair sampling");
  sub->add_option("--threads", flags.threads, "Worker threads (0 = hardware)");
  sub->add_option("--out", flags.out, "Output directory");
  sub->add_option("--quadrature", flags.quadrature, "Edge quadrature: exact-tree or trapezoid");
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Conformal deformation experiments on graph models of hyperbolic spaces", "uniformize"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"gen", "Generate a graph and write it as an edge list"},
      {"delta", "Estimate delta and run the tripod and arc-distance checks"},
      {"deform", "Build the deformed spaces, write them and run the deformation checks"},
      {"verify-uniform", "Measure the uniformity constants"},
      {"verify-gh", "Measure the Gehring-Hayman constant"},
      {"boundary-compare", "Roads, Gromov-product sandwich, metametric and boundary quasi-isometry checks"},
      {"verify-all", "Run every enabled check"}};
  for (const auto& [name, help] : commands) add_common_options(app.add_subcommand(name, help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run_command(command, build_config(flags), flags.graph_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace uniformize
