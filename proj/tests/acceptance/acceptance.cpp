// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "uniformize/boundary.hpp"
#include "uniformize/cli.hpp"
#include "uniformize/deformation.hpp"
#include "uniformize/generators.hpp"
#include "uniformize/hyperbolicity.hpp"
#include "uniformize/sampling.hpp"
#include "uniformize/uniformity.hpp"

using namespace uniformize;
namespace fs = std::filesystem;

namespace {

const std::vector<double> kSweep{0.1, 0.3, 0.5, 1.0};

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Space {
  std::string label;
  std::shared_ptr<const WeightedMetricGraph> graph;
  std::shared_ptr<const DistanceTable> dist;
};

Space make_space(const std::string& label, const GeneratorSpec& spec) {
  auto g = std::make_shared<const WeightedMetricGraph>(generate(spec));
  auto d = std::make_shared<const DistanceTable>(all_pairs_distance(*g));
  return {label, g, d};
}

DeformedSpace deform_space(const Space& s, double eps, double h = 1.0 / 14.0) {
  return DeformedSpace(s.graph, s.dist, {.epsilon = eps, .h = h, .quadrature = Quadrature::kExactTree});
}

std::vector<NodePair> inner_pairs(const Space& s) {
  PairSamplingOptions options;
  options.inner_only = true;
  options.full_limit = 1000;
  return sample_pairs(*s.graph, *s.dist, options);
}

std::vector<NodePair> default_pairs(const Space& s) { return sample_pairs(*s.graph, *s.dist, {}); }

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::string list(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + fmt(values[i]);
  return out + "]";
}

double global_delta(const Space& s) {
  return *estimate_delta(*s.graph, DeltaMode::kGlobal, {400, true}).delta_global;
}

std::vector<Space> trees() {
  return {make_space("tree b=2 R=4", {RegularTree{2, 4}}), make_space("tree b=2 R=6", {RegularTree{2, 6}}),
          make_space("tree b=2 R=8", {RegularTree{2, 8}}), make_space("tree b=3 R=4", {RegularTree{3, 4}}),
          make_space("tree b=3 R=6", {RegularTree{3, 6}})};
}

std::vector<Space> tilings() {
  return {make_space("{7,3} rings=3", {HyperbolicTiling{7, 3, 3}}),
          make_space("{7,3} rings=5", {HyperbolicTiling{7, 3, 5}}),
          make_space("{3,7} rings=3", {HyperbolicTiling{3, 7, 3}}),
          make_space("{4,5} rings=3", {HyperbolicTiling{4, 5, 3}})};
}

std::vector<Space> all_spaces() {
  auto out = trees();
  for (auto& s : tilings()) out.push_back(s);
  out.push_back(make_space("grid 6x6", {EuclideanGrid{6}}));
  out.push_back(make_space("grid 8x8", {EuclideanGrid{8}}));
  out.push_back(make_space("gnp n=60", {RandomGnp{60, 0.06, 3}}));
  return out;
}

Outcome criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::size_t trees_checked = 0;
  for (int b : {2, 3}) {
    for (int r : {4, 6, 8}) {
      const auto g = generate({RegularTree{b, r}});
      const auto report = estimate_delta(g, DeltaMode::kGlobal);
      ++trees_checked;
      if (!report.delta_global || *report.delta_global != 0.0) {
        o.pass = false;
        o.detail += "tree b=" + std::to_string(b) + " R=" + std::to_string(r) + " nonzero; ";
      }
    }
  }
  const auto grid = generate({EuclideanGrid{6}});
  const double ours = *estimate_delta(grid, DeltaMode::kGlobal).delta_global;
  const double brute = oracle::delta_global(oracle::floyd_warshall(grid));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.pass = o.pass && ours == brute && seconds < 30.0;
  o.detail += std::to_string(trees_checked) + " trees delta=0; grid 6x6 delta=" + fmt(ours) + " brute force=" +
              fmt(brute) + "; " + fmt(seconds) + " s";
  return o;
}

Outcome criterion_2(const std::vector<Space>& spaces) {
  Outcome o;
  double worst = std::numeric_limits<double>::infinity();
  std::size_t runs = 0;
  for (const auto& s : spaces) {
    for (double eps : kSweep) {
      const auto rec = check_harnack(deform_space(s, eps));
      worst = std::min(worst, rec.value("min_relative_slack"));
      ++runs;
      if (rec.status != CheckStatus::kPass) {
        o.pass = false;
        o.detail += s.label + " eps=" + fmt(eps) + " failed; ";
      }
    }
  }
  o.pass = o.pass && worst >= -1e-9;
  o.detail += std::to_string(runs) + " space/eps runs over all node pairs, min slack " + fmt(worst);
  return o;
}

Outcome criterion_3(const std::vector<Space>& spaces) {
  Outcome o;
  std::size_t runs = 0;
  for (const auto& s : spaces) {
    for (double eps : kSweep) {
      const auto rec = check_diameter(deform_space(s, eps));
      ++runs;
      if (rec.status != CheckStatus::kPass) {
        o.pass = false;
        o.detail += s.label + " eps=" + fmt(eps) + " diameter " + fmt(rec.value("diameter")) + "; ";
      }
    }
  }
  const auto tree = make_space("tree b=2 R=8", {RegularTree{2, 8}});
  const auto rec = check_diameter(deform_space(tree, 0.5));
  const double bound = rec.value("bound");
  const double diam = rec.value("diameter");
  o.pass = o.pass && std::abs(bound - 6.5949) < 5e-5 && diam < bound;
  o.detail += std::to_string(runs) + " runs within 2e^eps/eps; binary tree R=8 eps=0.5 diameter " + fmt(diam) +
              " < bound " + fmt(bound);
  return o;
}

Outcome criterion_4() {
  Outcome o;
  std::vector<Space> spaces = trees();
  spaces.push_back(make_space("tree b=2 R=10", {RegularTree{2, 10}}));
  for (auto& s : tilings()) spaces.push_back(s);
  spaces.push_back(make_space("{7,3} rings=7", {HyperbolicTiling{7, 3, 7}}));
  double worst = std::numeric_limits<double>::infinity();
  std::size_t checked = 0, gated = 0;
  for (const auto& s : spaces) {
    for (double eps : kSweep) {
      const auto rec = check_boundary_lower_bound(deform_space(s, eps));
      if (rec.status == CheckStatus::kSkipped) {
        ++gated;
        continue;
      }
      ++checked;
      worst = std::min(worst, rec.value("min_slack"));
      if (rec.status != CheckStatus::kPass) {
        o.pass = false;
        o.detail += s.label + " eps=" + fmt(eps) + " failed; ";
      }
    }
  }
  o.pass = o.pass && worst >= -1e-9 && checked > 0;
  o.detail += std::to_string(checked) + " space/eps runs, min slack " + fmt(worst) + " (" + std::to_string(gated) +
              " runs with eps*R < 1 not asserted)";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  double tree_k = 1.0;
  for (const auto& s : trees()) {
    const auto pairs = default_pairs(s);
    for (double eps : kSweep) {
      const auto report = verify_gehring_hayman(deform_space(s, eps), pairs, 1.0 / 14.0);
      if (report.k_emp != 1.0) {
        o.pass = false;
        tree_k = std::max(tree_k, report.k_emp);
      }
    }
  }
  std::vector<double> tiling_k;
  for (int rings : {3, 4, 5}) {
    const auto s = make_space("{7,3}", {HyperbolicTiling{7, 3, rings}});
    const auto report = verify_gehring_hayman(deform_space(s, 0.3), default_pairs(s), 1.0 / 14.0);
    tiling_k.push_back(report.k_emp);
    if (!std::isfinite(report.k_emp) || report.record.status != CheckStatus::kPass) o.pass = false;
  }
  const double spread = relative_spread(tiling_k);
  o.pass = o.pass && spread < 0.2;
  o.detail = "trees K_emp=" + fmt(tree_k) + "; {7,3} rings 3,4,5 eps=0.3 K_emp " + list(tiling_k) + ", spread " +
             fmt(spread);
  return o;
}

Outcome criterion_6() {
  Outcome o;
  double worst_cone = 0.0;
  double worst_qc_gap = 0.0;
  for (const auto& s : trees()) {
    const auto pairs = inner_pairs(s);
    for (double eps : kSweep) {
      const auto report = verify_uniform(deform_space(s, eps, 0.0), pairs, {.h = 0.0, .delta = 0.0});
      worst_cone = std::max(worst_cone, report.a_cone);
      worst_qc_gap = std::max(worst_qc_gap, std::abs(report.a_quasiconvex - 1.0));
      if (report.record.status != CheckStatus::kPass) o.pass = false;
    }
  }
  o.pass = o.pass && worst_cone <= std::numbers::e && worst_qc_gap == 0.0;
  std::vector<double> tiling_a;
  for (int rings : {4, 5, 6}) {
    const auto s = make_space("{7,3}", {HyperbolicTiling{7, 3, rings}});
    const auto report = verify_uniform(deform_space(s, 0.3), inner_pairs(s), {.delta = global_delta(s)});
    tiling_a.push_back(report.a);
    if (!std::isfinite(report.a)) o.pass = false;
  }
  const double spread = relative_spread(tiling_a);
  o.pass = o.pass && spread < 0.2;
  o.detail = "trees h=0: max A_cone " + fmt(worst_cone) + " <= e, A_quasiconvex - 1 = " + fmt(worst_qc_gap) +
             "; {7,3} rings 4,5,6 eps=0.3 A " + list(tiling_a) + ", spread " + fmt(spread);
  return o;
}

Outcome criterion_7() {
  Outcome o;
  double tree_k = 0.0;
  std::size_t tree_pairs = 0, other_pairs = 0;
  double worst_ratio = 0.0;  // k_emp / (3 mu + 3 h) where the bound is positive
  auto scan = [&](const Space& s, bool tree, std::size_t stages, std::size_t stride) {
    const auto& g = *s.graph;
    for (std::size_t i = 0; i < g.frontier().size(); i += stride) {
      const auto road = build_road(g, *s.dist, g.base(), g.frontier()[i], stages);
      for (std::size_t n = 0; n < stages; ++n) {
        for (std::size_t m = n; m < stages; ++m) {
          const auto rec = check_road_concatenation(g, *s.dist, road, n, m);
          if (rec.status != CheckStatus::kPass) o.pass = false;
          if (tree) {
            ++tree_pairs;
            tree_k = std::max(tree_k, rec.value("k_emp"));
          } else {
            ++other_pairs;
            if (rec.value("bound") > 0.0) worst_ratio = std::max(worst_ratio, rec.value("k_emp") / rec.value("bound"));
            else if (rec.value("k_emp") > 1e-9) o.pass = false;
          }
        }
      }
    }
  };
  scan(make_space("tree", {RegularTree{2, 8}}), true, 8, 17);
  scan(make_space("tree", {RegularTree{3, 5}}), true, 5, 13);
  // a tree with irregular edge lengths
  {
    auto base = generate({RegularTree{2, 7}});
    std::vector<Edge> edges(base.edges().begin(), base.edges().end());
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].length = 0.25 * static_cast<double>(1 + (i * 7) % 9);
    auto g = std::make_shared<const WeightedMetricGraph>(base.size(), edges, base.base(),
                                                         std::vector<NodeId>(base.frontier().begin(), base.frontier().end()));
    scan({"perturbed tree", g, std::make_shared<const DistanceTable>(all_pairs_distance(*g))}, true, 7, 9);
  }
  for (int rings : {4, 5, 6}) scan(make_space("{7,3}", {HyperbolicTiling{7, 3, rings}}), false, 4, 1);
  scan(make_space("{4,5}", {HyperbolicTiling{4, 5, 4}}), false, 4, 3);
  scan(make_space("{3,7}", {HyperbolicTiling{3, 7, 4}}), false, 4, 5);
  // roads whose arcs are other geodesics or 1-short detours, so mu > 0
  double perturbed_mu = 0.0;
  auto scan_perturbed = [&](const Space& s, std::size_t stages, std::size_t stride) {
    const auto& g = *s.graph;
    const double h = 1.0;
    for (std::size_t i = 0; i < g.frontier().size(); i += stride) {
      const auto spine = shortest_arc(g, *s.dist, g.base(), g.frontier()[i]);
      const std::size_t edges = spine.size() - 1;
      std::vector<ArcPath> arcs;
      for (std::size_t k = 1; k <= stages; ++k) {
        const auto options = h_short_arcs(g, *s.dist, g.base(), spine.node(k * edges / stages), h, 6);
        arcs.push_back(options[(i + k) % options.size()]);
      }
      const auto road = make_road(*s.dist, std::move(arcs), h);
      perturbed_mu = std::max(perturbed_mu, road.mu);
      for (std::size_t n = 0; n < stages; ++n) {
        for (std::size_t m = n; m < stages; ++m) {
          const auto rec = check_road_concatenation(g, *s.dist, road, n, m);
          if (rec.status != CheckStatus::kPass) o.pass = false;
          ++other_pairs;
          worst_ratio = std::max(worst_ratio, rec.value("k_emp") / rec.value("bound"));
        }
      }
    }
  };
  scan_perturbed(make_space("{7,3}", {HyperbolicTiling{7, 3, 5}}), 4, 1);
  scan_perturbed(make_space("{4,5}", {HyperbolicTiling{4, 5, 4}}), 4, 3);
  scan_perturbed(make_space("{3,7}", {HyperbolicTiling{3, 7, 4}}), 3, 5);
  o.pass = o.pass && tree_k == 0.0 && worst_ratio <= 1.0 + 1e-9;
  o.detail = std::to_string(tree_pairs) + " tree (n,m) pairs with K_emp max " + fmt(tree_k) + "; " +
             std::to_string(other_pairs) + " tiling (n,m) pairs, max K_emp/(3mu+3h) " + fmt(worst_ratio) +
             ", largest perturbed mu " + fmt(perturbed_mu);
  return o;
}

Outcome criterion_8() {
  Outcome o;
  std::vector<std::string> parts;
  auto run = [&](const Space& s, double eps, double delta) {
    const auto report = check_lemma_3_3(deform_space(s, eps), inner_pairs(s), delta);
    const double near = report.record.value("near_branch_pairs");
    const double far = report.record.value("far_branch_pairs");
    const bool ok = report.record.status == CheckStatus::kPass && std::isfinite(report.c_emp) && near > 0 && far > 0;
    if (!ok) o.pass = false;
    parts.push_back(s.label + " eps=" + fmt(eps) + " C=" + fmt(report.c_emp) + " branches " + fmt(near) + "/" + fmt(far));
    return report.c_emp;
  };
  std::vector<double> tree_c;
  for (int r : {8, 10}) tree_c.push_back(run(make_space("tree R=" + std::to_string(r), {RegularTree{2, r}}), 0.5, 0.0));
  run(make_space("tree b=3 R=6", {RegularTree{3, 6}}), 0.3, 0.0);
  for (const auto& s : {make_space("{7,3} rings=6", {HyperbolicTiling{7, 3, 6}}),
                        make_space("{3,7} rings=4", {HyperbolicTiling{3, 7, 4}}),
                        make_space("{4,5} rings=4", {HyperbolicTiling{4, 5, 4}})}) {
    const double delta = global_delta(s);
    run(s, 0.9 / (5.0 * delta), delta);
  }
  const double spread = relative_spread(tree_c);
  o.pass = o.pass && spread < 0.2;
  for (const auto& p : parts) o.detail += p + "; ";
  o.detail += "binary tree R=8,10 spread " + fmt(spread);
  return o;
}

Outcome criterion_9() {
  Outcome o;
  double worst = std::numeric_limits<double>::infinity();
  std::size_t pairs = 0;
  for (const auto& s : {make_space("b2R6", {RegularTree{2, 6}}), make_space("b2R8", {RegularTree{2, 8}}),
                        make_space("b2R10", {RegularTree{2, 10}}), make_space("b3R5", {RegularTree{3, 5}})}) {
    for (double eps : {0.1, 0.3, 0.5, 0.9}) {
      const auto ds = deform_space(s, eps);
      const auto set = build_boundary_proxies(ds, s.graph->base(), 0.0);
      const auto rec = check_metametric_sandwich(set);
      worst = std::min({worst, rec.value("min_lower_slack"), rec.value("min_upper_slack")});
      pairs += set.size() * (set.size() - 1);
      if (rec.status != CheckStatus::kPass) o.pass = false;
    }
  }
  o.pass = o.pass && worst >= -1e-9;
  o.detail = std::to_string(pairs) + " ordered proxy pairs, min sandwich slack " + fmt(worst);
  return o;
}

Outcome criterion_10() {
  Outcome o;
  std::vector<double> m_values, tails;
  std::string rays;
  for (int r : {6, 8, 10}) {
    const auto s = make_space("tree", {RegularTree{2, r}});
    const auto ds = deform_space(s, 0.5);
    const auto rec = check_boundary_quasi_isometry(ds, build_boundary_proxies(ds, 0, 0.0));
    m_values.push_back(rec.value("m_emp"));
    if (rec.status != CheckStatus::kPass) o.pass = false;

    const double c = check_lemma_3_3(ds, inner_pairs(s), 0.0).c_emp;
    const auto& g = *s.graph;
    auto ray_to = [&](NodeId leaf) { return radial_ray(g, *s.dist, leaf); };
    // split at depth 3: first leaf under node 7 versus the last leaf under node 8
    const auto left = ray_to(g.frontier().front());
    NodeId other = g.frontier().front();
    for (NodeId f : g.frontier()) {
      const auto ray = ray_to(f);
      if (ray[3] == left[3] && ray[4] != left[4]) other = f;
    }
    const auto right = ray_to(other);
    const auto split = check_gromov_to_cauchy(ds, 0, left, right, c);
    double split_min = std::numeric_limits<double>::infinity();
    for (std::size_t n = 4; n < std::min(left.size(), right.size()); ++n) {
      split_min = std::min(split_min, ds.distance(left[n], right[n]));
    }
    const std::vector<NodeId> shifted(left.begin() + 2, left.end());
    const auto same = check_gromov_to_cauchy(ds, 0, left, shifted, c);
    const bool split_ok = other != left.back() && split.value("equivalent") == 0.0 && split_min > 0.1;
    const bool same_ok = same.value("equivalent") == 1.0 && same.value("distances_monotone") == 1.0 &&
                         same.status == CheckStatus::kPass;
    if (!split_ok || !same_ok) o.pass = false;
    tails.push_back(same.value("tail_contraction"));
    rays += "R=" + std::to_string(r) + " split gap min past depth 3 " + fmt(split_min) + ", shifted tail " +
            fmt(tails.back()) + "; ";
  }
  // the shifted gaps must keep shrinking as the rays get longer
  for (std::size_t i = 1; i < tails.size(); ++i) {
    if (!(tails[i] < tails[i - 1])) o.pass = false;
  }
  if (!(tails.back() < 0.05)) o.pass = false;
  const double spread = relative_spread(m_values);
  o.pass = o.pass && spread < 0.25;
  o.detail = "M_emp " + list(m_values) + " spread " + fmt(spread) + "; " + rays;
  return o;
}

int quiet_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "uniformize");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream sink;
  auto* old = std::cout.rdbuf(sink.rdbuf());
  const int code = run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old);
  return code;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Outcome criterion_11() {
  Outcome o;
  const fs::path out = fs::temp_directory_path() / ("uniformize_acceptance_" + std::to_string(::getpid()));
  const fs::path first = out.string() + "_first";
  fs::remove_all(out);
  fs::remove_all(first);
  const std::vector<std::string> args{"verify-all", "--set", "radius=8", "--seed", "7", "--out", out.string()};
  const int code1 = quiet_cli(args);
  fs::copy(out, first, fs::copy_options::recursive);
  const int code2 = quiet_cli(args);
  std::size_t files = 0, differing = 0;
  for (const auto& entry : fs::directory_iterator(first)) {
    if (entry.path().filename() == "header.json") continue;
    ++files;
    if (slurp(entry.path()) != slurp(out / entry.path().filename())) ++differing;
  }
  fs::remove_all(out);
  fs::remove_all(first);
  o.pass = code1 == 0 && code2 == 0 && files >= 5 && differing == 0;
  o.detail = "verify-all on binary tree R=8 twice: exit " + std::to_string(code1) + "/" + std::to_string(code2) + ", " +
             std::to_string(files) + " report files compared, " + std::to_string(differing) + " differ";
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto spaces = all_spaces();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact hyperbolicity oracle", criterion_1},
      {"Harnack inequality", [&] { return criterion_2(spaces); }},
      {"diameter bound", [&] { return criterion_3(spaces); }},
      {"boundary distance lower bound", criterion_4},
      {"Gehring-Hayman constant", criterion_5},
      {"uniformity constants", criterion_6},
      {"road concatenation", criterion_7},
      {"Gromov product sandwich of d_eps", criterion_8},
      {"metametric sandwich", criterion_9},
      {"boundary quasi-isometry", criterion_10},
      {"determinism", criterion_11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first
              << "): " << outcome.detail << " [" << fmt(seconds) << " s]" << std::endl;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures ? "FAIL" : "PASS") << " acceptance: " << (criteria.size() - failures) << "/"
            << criteria.size() << " criteria, " << fmt(total) << " s" << std::endl;
  return failures;
}
