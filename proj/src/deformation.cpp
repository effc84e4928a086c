#include "uniformize/deformation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "uniformize/boundary.hpp"
#include "uniformize/error.hpp"
#include "uniformize/parallel.hpp"

namespace uniformize {

const char* to_string(Quadrature q) { return q == Quadrature::kTrapezoid ? "trapezoid" : "exact-tree"; }

std::optional<Quadrature> parse_quadrature(const std::string& text) {
  if (text == "trapezoid") return Quadrature::kTrapezoid;
  if (text == "exact-tree" || text == "exact") return Quadrature::kExactTree;
  return std::nullopt;
}

EpsilonPolicy epsilon_policy(double epsilon, double delta) {
  EpsilonPolicy policy;
  policy.delta = delta;
  policy.epsilon_bound = delta > 0.0 ? std::min(1.0, 1.0 / (5.0 * delta)) : 1.0;
  policy.satisfied = epsilon * delta < 0.2;
  return policy;
}

double edge_density_integral(Quadrature quadrature, double epsilon, double length, double du, double dv) {
  if (quadrature == Quadrature::kTrapezoid) {
    return length * (std::exp(-epsilon * du) + std::exp(-epsilon * dv)) / 2.0;
  }
  // Distance to p peaks where the two approaches meet.
  const double peak = std::clamp((dv + length - du) / 2.0, 0.0, length);
  const double near_u = std::exp(-epsilon * du) * -std::expm1(-epsilon * peak) / epsilon;
  const double near_v = std::exp(-epsilon * dv) * -std::expm1(-epsilon * (length - peak)) / epsilon;
  return near_u + near_v;
}

DeformedSpace::DeformedSpace(std::shared_ptr<const WeightedMetricGraph> graph,
                             std::shared_ptr<const DistanceTable> base_distance, DeformationParams params)
    : graph_(std::move(graph)), base_distance_(std::move(base_distance)), params_(params) {
  if (!(params_.epsilon > 0.0) || !std::isfinite(params_.epsilon)) throw Error("epsilon must be positive");
  if (params_.h < 0.0) throw Error("h must be nonnegative");
  const auto& g = *graph_;
  if (base_distance_->size() != g.size()) throw Error("distance table does not match the graph");
  const NodeId p = g.base();
  const double eps = params_.epsilon;

  density_.resize(g.size());
  for (NodeId x = 0; x < g.size(); ++x) density_[x] = std::exp(-eps * (*base_distance_)(x, p));

  deformed_lengths_.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    const double w =
        edge_density_integral(params_.quadrature, eps, e.length, (*base_distance_)(e.u, p), (*base_distance_)(e.v, p));
    if (!(w > 0.0)) throw Error("deformed edge length underflowed to zero; eps * radius is too large");
    deformed_lengths_.push_back(w);
  }
  deformed_ = all_pairs_distance(g, deformed_lengths_);

  frontier_distance_.assign(g.size(), std::numeric_limits<double>::infinity());
  for (NodeId x = 0; x < g.size(); ++x) {
    for (NodeId f : g.frontier()) frontier_distance_[x] = std::min(frontier_distance_[x], deformed_(x, f));
  }
}

double DeformedSpace::deformed_length(const ArcPath& arc) const {
  if (arc.size() < 2) return 0.0;
  const bool forward = arc.front() <= arc.back();
  double total = 0.0;
  for (std::size_t k = 1; k < arc.size(); ++k) {
    const std::size_t i = forward ? k : arc.size() - k;
    total += deformed_lengths_[*graph_->edge_index(arc.node(i - 1), arc.node(i))];
  }
  return total;
}

std::vector<double> DeformedSpace::deformed_prefix(const ArcPath& arc) const {
  std::vector<double> prefix(arc.size(), 0.0);
  for (std::size_t i = 1; i < arc.size(); ++i) {
    prefix[i] = prefix[i - 1] + deformed_lengths_[*graph_->edge_index(arc.node(i - 1), arc.node(i))];
  }
  return prefix;
}

DeformedSpace deform(std::shared_ptr<const WeightedMetricGraph> g, std::shared_ptr<const DistanceTable> distances,
                     const DeformationParams& params) {
  return DeformedSpace(std::move(g), std::move(distances), params);
}

DeformedSpace deform(const WeightedMetricGraph& g, const DeformationParams& params) {
  auto graph = std::make_shared<const WeightedMetricGraph>(g);
  auto dist = std::make_shared<const DistanceTable>(all_pairs_distance(*graph));
  return DeformedSpace(std::move(graph), std::move(dist), params);
}

namespace {

/// Per-row minima reduced in row order, so the witness does not depend on
/// the thread count.
template <class RowFn>
MinSlack scan_rows(std::size_t n, RowFn&& row) {
  std::vector<MinSlack> per_row(n);
  parallel_for(n, [&](std::size_t i) { per_row[i] = row(static_cast<NodeId>(i)); });
  MinSlack out;
  for (auto& r : per_row) {
    if (r.seen) out.update(r.slack, r.witness);
  }
  return out;
}

}  // namespace

CheckRecord check_harnack(const DeformedSpace& ds) {
  CheckRecord rec{.name = "harnack"};
  const auto& dist = ds.base_distance();
  const double eps = ds.epsilon();
  const std::size_t n = ds.graph().size();
  MinSlack slack = scan_rows(n, [&](NodeId x) {
    MinSlack local;
    for (NodeId y = 0; y < n; ++y) {
      const double ratio = ds.density(x) / ds.density(y);
      const double lower = std::exp(-eps * dist(x, y));
      const double upper = std::exp(eps * dist(x, y));
      local.update(std::min(ratio / lower - 1.0, 1.0 - ratio / upper), {x, y});
    }
    return local;
  });
  rec.values["min_relative_slack"] = slack.slack;
  rec.values["pairs_checked"] = static_cast<double>(n * n);
  rec.witnesses["min_slack"] = slack.witness;
  rec.require(slack.slack >= -kSlackTolerance);
  return rec;
}

CheckRecord check_diameter(const DeformedSpace& ds) {
  CheckRecord rec{.name = "diameter"};
  const double eps = ds.epsilon();
  const auto& table = ds.deformed_distance();
  const std::size_t n = ds.graph().size();
  MaxRatio diam;
  for (NodeId x = 0; x < n; ++x) {
    for (NodeId y = x; y < n; ++y) diam.update(table(x, y), {x, y});
  }
  const double bound = 2.0 * std::exp(eps) / eps;
  rec.values["diameter"] = diam.value;
  rec.values["bound"] = bound;
  rec.values["margin"] = bound - diam.value;
  rec.witnesses["diameter"] = diam.witness;
  rec.require(diam.value <= bound + kSlackTolerance);
  return rec;
}

CheckRecord check_local_bilipschitz(const DeformedSpace& ds, NodeId w) {
  CheckRecord rec{.name = "local_bilipschitz"};
  if (w >= ds.graph().size()) throw Error("check_local_bilipschitz: centre is not a node");
  const auto& dist = ds.base_distance();
  const double eps = ds.epsilon();
  std::vector<NodeId> ball;
  for (NodeId x = 0; x < ds.graph().size(); ++x) {
    if (dist(w, x) <= 1.0 + kSlackTolerance) ball.push_back(x);
  }
  rec.values["ball_size"] = static_cast<double>(ball.size());
  rec.values["lower_factor"] = std::exp(-5.0 * eps) * ds.density(w);
  rec.values["upper_factor"] = 2.0 * std::exp(5.0 * eps) * ds.density(w);
  if (ball.size() < 2) {
    rec.vacuous = true;
    rec.note = "ball B(w,1) holds a single node";
    return rec;
  }
  MinSlack lower_slack, upper_slack;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (std::size_t j = i + 1; j < ball.size(); ++j) {
      const NodeId x = ball[i];
      const NodeId y = ball[j];
      const double d = dist(x, y);
      const double de = ds.distance(x, y);
      lower_slack.update(de / (rec.values["lower_factor"] * d) - 1.0, {x, y});
      upper_slack.update(1.0 - de / (rec.values["upper_factor"] * d), {x, y});
    }
  }
  rec.values["min_lower_slack"] = lower_slack.slack;
  rec.values["min_upper_slack"] = upper_slack.slack;
  rec.witnesses["lower"] = lower_slack.witness;
  rec.witnesses["upper"] = upper_slack.witness;
  rec.require(lower_slack.slack >= -kSlackTolerance && upper_slack.slack >= -kSlackTolerance);
  return rec;
}

namespace {
double truncation_radius(const DeformedSpace& ds) {
  const auto& g = ds.graph();
  if (g.frontier().empty()) throw Error("no boundary proxy: the graph has an empty frontier");
  double radius = std::numeric_limits<double>::infinity();
  for (NodeId f : g.frontier()) radius = std::min(radius, ds.base_distance()(g.base(), f));
  return radius;
}
}  // namespace

BoundaryDistance boundary_distance(const DeformedSpace& ds, NodeId x) {
  const double radius = truncation_radius(ds);
  const double eps = ds.epsilon();
  BoundaryDistance out;
  out.lower = ds.frontier_distance(x);
  out.upper = out.lower + std::exp(-eps * radius) / eps;
  return out;
}

CheckRecord check_boundary_lower_bound(const DeformedSpace& ds) {
  CheckRecord rec{.name = "boundary_lower_bound"};
  const double radius = truncation_radius(ds);
  const double eps = ds.epsilon();
  const NodeId p = ds.graph().base();
  rec.values["truncation_radius"] = radius;
  if (eps * radius < 1.0) {
    rec.status = CheckStatus::kSkipped;
    rec.note = "eps * R < 1: frontier lies within the 1/eps integration scale";
    return rec;
  }
  MinSlack slack;
  std::size_t inner = 0;
  for (NodeId x = 0; x < ds.graph().size(); ++x) {
    if (ds.base_distance()(p, x) > radius / 2.0 + kSlackTolerance) continue;
    ++inner;
    const double bound = ds.density(x) / (std::numbers::e * eps);
    slack.update(boundary_distance(ds, x).lower - bound, {x});
  }
  rec.values["inner_nodes"] = static_cast<double>(inner);
  rec.values["min_slack"] = slack.slack;
  rec.witnesses["min_slack"] = slack.witness;
  rec.require(slack.slack >= -kSlackTolerance);
  return rec;
}

CheckRecord check_incompleteness_cauchy(const DeformedSpace& ds, std::span<const NodeId> ray) {
  if (ray.size() < 3) throw Error("check_incompleteness_cauchy: ray needs at least 3 nodes");
  const auto& g = ds.graph();
  const auto& dist = ds.base_distance();
  if (ray.front() != g.base()) throw Error("check_incompleteness_cauchy: ray must start at the base point");
  for (std::size_t i = 1; i < ray.size(); ++i) {
    if (!(dist(g.base(), ray[i]) > dist(g.base(), ray[i - 1]))) {
      throw Error("check_incompleteness_cauchy: d(p, .) must increase strictly along the ray");
    }
  }
  const ArcPath arc = ArcPath::from_nodes(g, std::vector<NodeId>(ray.begin(), ray.end()));
  const auto rough = verify_rough_quasi_geodesic(dist, arc);
  const double eps = ds.epsilon();

  CheckRecord rec{.name = "incompleteness_cauchy"};
  MinSlack slack;
  for (std::size_t n = 0; n < arc.size(); ++n) {
    const double bound = std::exp(eps * rough.k_emp - eps * arc.param(n)) / eps;
    for (std::size_t m = n; m < arc.size(); ++m) {
      slack.update(bound - ds.distance(arc.node(n), arc.node(m)), {arc.node(n), arc.node(m)});
    }
  }
  rec.values["k_rough"] = rough.k_emp;
  rec.values["ray_length"] = arc.length();
  rec.values["tail_distance"] = ds.distance(arc.node(1), arc.back());
  rec.values["min_slack"] = slack.slack;
  rec.witnesses["min_slack"] = slack.witness;
  rec.require(slack.slack >= -kSlackTolerance);
  return rec;
}

std::vector<NodeId> radial_ray(const WeightedMetricGraph& g, const DistanceTable& dist, NodeId target) {
  const auto arc = shortest_arc(g, dist, g.base(), target);
  return {arc.nodes().begin(), arc.nodes().end()};
}

}  // namespace uniformize
