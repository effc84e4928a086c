#include "uniformize/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uniformize/error.hpp"
#include "uniformize/gromov.hpp"
#include "uniformize/parallel.hpp"

namespace uniformize {

Road build_road(const WeightedMetricGraph& g, const DistanceTable& dist, NodeId origin, NodeId direction,
                std::size_t stages) {
  if (origin >= g.size() || direction >= g.size()) throw Error("build_road: node out of range");
  if (direction == origin || !g.is_frontier(direction)) {
    throw Error("build_road: direction must be a frontier node other than the origin");
  }
  if (stages == 0) throw Error("build_road: need at least one stage");
  const ArcPath spine = shortest_arc(g, dist, origin, direction);
  const std::size_t edges = spine.size() - 1;
  if (stages > edges) throw Error("build_road: more stages than edges towards the direction");

  std::vector<ArcPath> arcs;
  for (std::size_t i = 1; i <= stages; ++i) arcs.push_back(shortest_arc(g, dist, origin, spine.node(i * edges / stages)));
  return make_road(dist, std::move(arcs), 0.0);
}

Road make_road(const DistanceTable& dist, std::vector<ArcPath> arcs, double h) {
  if (arcs.empty()) throw Error("make_road: need at least one arc");
  for (const auto& arc : arcs) {
    if (arc.empty() || arc.front() != arcs.front().front()) throw Error("make_road: arcs must share their first node");
    if (!arc.is_h_short(dist, h)) throw Error("make_road: arc is not h-short");
  }
  Road road;
  road.arcs = std::move(arcs);
  road.h = h;
  MaxRatio mu;
  mu.update(0.0, {});
  for (std::size_t i = 0; i < road.arcs.size(); ++i) {
    const auto& inner = road.arcs[i];
    for (std::size_t j = i + 1; j < road.arcs.size(); ++j) {
      const auto& outer = road.arcs[j];
      for (std::size_t k = 0; k < inner.size(); ++k) {
        const NodeId moved = outer.node(outer.index_nearest(inner.param(k)));
        mu.update(dist(inner.node(k), moved), {inner.node(k), moved});
      }
    }
  }
  road.mu = mu.value;
  road.mu_witness = mu.witness;
  return road;
}

CheckRecord check_road(const Road& road, double delta) {
  CheckRecord rec{.name = "road"};
  const double bound = 4.0 * delta + 2.0 * road.h;
  rec.values["mu"] = road.mu;
  rec.values["bound"] = bound;
  rec.values["stages"] = static_cast<double>(road.arcs.size());
  rec.witnesses["mu"] = road.mu_witness;
  bool increasing = true;
  for (std::size_t i = 1; i < road.arcs.size(); ++i) {
    increasing = increasing && road.arcs[i].length() > road.arcs[i - 1].length();
  }
  if (!increasing) rec.note = "arc lengths are not strictly increasing";
  rec.require(increasing && road.mu <= bound + kSlackTolerance);
  return rec;
}

ArcPath concatenate_road_arcs(const WeightedMetricGraph& g, const DistanceTable& dist, const Road& road,
                              std::size_t n, std::size_t m) {
  if (n > m || m >= road.arcs.size()) throw Error("concatenate_road_arcs: need n <= m < stages");
  const ArcPath& first = road.arcs[n];
  if (n == m) return first;
  const ArcPath& last = road.arcs[m];
  const std::size_t join = last.index_nearest(first.length());
  const ArcPath bridge = shortest_arc(g, dist, first.back(), last.node(join));
  if (bridge.length() > road.mu + road.h + kSlackTolerance) {
    throw Error("concatenate_road_arcs: connector longer than mu + h");
  }
  std::vector<NodeId> nodes(first.nodes().begin(), first.nodes().end());
  nodes.insert(nodes.end(), bridge.nodes().begin() + 1, bridge.nodes().end());
  nodes.insert(nodes.end(), last.nodes().begin() + static_cast<std::ptrdiff_t>(join) + 1, last.nodes().end());
  return ArcPath::from_nodes(g, std::move(nodes));
}

RoughQuasiGeodesic verify_rough_quasi_geodesic(const DistanceTable& dist, const ArcPath& path) {
  RoughQuasiGeodesic out;
  MaxRatio rough, excess;
  rough.update(0.0, {});
  excess.update(-std::numeric_limits<double>::infinity(), {});
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      const double gap = path.param(j) - path.param(i);
      const double d = dist(path.node(i), path.node(j));
      rough.update(gap - d, {path.node(i), path.node(j)});
      excess.update(d - gap, {path.node(i), path.node(j)});
    }
  }
  out.k_emp = rough.value;
  out.max_upper_excess = path.size() < 2 ? 0.0 : excess.value;
  out.witness = rough.witness;
  return out;
}

CheckRecord check_road_concatenation(const WeightedMetricGraph& g, const DistanceTable& dist, const Road& road,
                                     std::size_t n, std::size_t m) {
  CheckRecord rec{.name = "road_concatenation"};
  const ArcPath path = concatenate_road_arcs(g, dist, road, n, m);
  const auto rough = verify_rough_quasi_geodesic(dist, path);
  const double bound = 3.0 * road.mu + 3.0 * road.h;
  rec.values["n"] = static_cast<double>(n);
  rec.values["m"] = static_cast<double>(m);
  rec.values["k_emp"] = rough.k_emp;
  rec.values["bound"] = bound;
  rec.values["max_upper_excess"] = rough.max_upper_excess;
  rec.values["length"] = path.length();
  rec.witnesses["k_emp"] = rough.witness;
  rec.require(rough.k_emp <= bound + kSlackTolerance && rough.max_upper_excess <= kSlackTolerance);
  return rec;
}

Lemma33Report check_lemma_3_3(const DeformedSpace& ds, std::span<const NodePair> pairs, double delta) {
  const auto& dist = ds.base_distance();
  const NodeId p = ds.graph().base();
  const double eps = ds.epsilon();
  Lemma33Report report;
  MaxRatio worst;
  std::size_t near = 0, far = 0, degenerate = 0;
  for (const auto& [x, y] : pairs) {
    if (x == y) {
      ++degenerate;
      continue;
    }
    const double de = ds.distance(x, y);
    if (!(de > 0.0)) throw Error("check_lemma_3_3: zero deformed distance between distinct nodes");
    const double d = dist(x, y);
    const double model = std::exp(-eps * gromov_product(dist, x, y, p)) * std::min(0.5, eps * d) / eps;
    const double r = model / de;
    const bool near_branch = eps * d <= 0.5;
    (near_branch ? near : far) += 1;
    report.rows.push_back({x, y, r, near_branch});
    worst.update(std::max(r, 1.0 / r), {x, y});
  }
  report.c_emp = worst.value;

  auto& rec = report.record;
  rec.name = "lemma_3_3";
  rec.values["c_emp"] = worst.value;
  rec.values["near_branch_pairs"] = static_cast<double>(near);
  rec.values["far_branch_pairs"] = static_cast<double>(far);
  rec.values["degenerate_pairs"] = static_cast<double>(degenerate);
  rec.values["eps_delta"] = eps * delta;
  rec.witnesses["c_emp"] = worst.witness;
  if (!worst.seen) {
    rec.vacuous = true;
    rec.note = "every sampled pair is degenerate";
    return report;
  }
  if (near == 0 || far == 0) rec.note = near == 0 ? "branch eps*d <= 1/2 is empty" : "branch eps*d > 1/2 is empty";
  if (eps * delta >= 0.2) {
    rec.status = CheckStatus::kSkipped;
    rec.note = "eps * delta >= 1/5";
    return report;
  }
  rec.require(std::isfinite(worst.value));
  return report;
}

BoundaryProxySet build_boundary_proxies(const DeformedSpace& ds, NodeId origin, double delta,
                                        std::size_t limit) {
  const auto& g = ds.graph();
  if (g.frontier().empty()) throw Error("build_boundary_proxies: no boundary proxy (empty frontier)");
  if (origin >= g.size()) throw Error("build_boundary_proxies: origin out of range");
  const double eps = ds.epsilon();
  if (eps * delta >= 0.2) throw Error("build_boundary_proxies: eps * delta must be below 1/5");

  BoundaryProxySet set;
  set.origin = origin;
  set.epsilon = eps;
  const auto frontier = g.frontier();
  if (limit == 0 || limit >= frontier.size()) {
    set.proxies.assign(frontier.begin(), frontier.end());
  } else {
    for (std::size_t i = 0; i < limit; ++i) set.proxies.push_back(frontier[i * frontier.size() / limit]);
  }
  const std::size_t m = set.proxies.size();
  const auto& dist = ds.base_distance();
  set.tau.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      set.tau[i * m + j] = std::exp(-eps * gromov_product(dist, set.proxies[i], set.proxies[j], origin));
    }
  }
  // Chains of length >= 1, so the diagonal keeps tau(x, x) unless a detour is cheaper.
  set.theta = set.tau;
  auto& theta = set.theta;
  for (std::size_t k = 0; k < m; ++k) {
    parallel_for(m, [&](std::size_t i) {
      const double via = theta[i * m + k];
      for (std::size_t j = 0; j < m; ++j) {
        const double candidate = via + theta[k * m + j];
        if (candidate < theta[i * m + j]) theta[i * m + j] = candidate;
      }
    });
  }
  return set;
}

CheckRecord check_metametric_sandwich(const BoundaryProxySet& proxies) {
  CheckRecord rec{.name = "metametric_sandwich"};
  const std::size_t m = proxies.size();
  MinSlack lower, upper, triangle;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const NodeId x = proxies.proxies[i];
      const NodeId y = proxies.proxies[j];
      lower.update(proxies.theta_at(i, j) - proxies.tau_at(i, j) / 2.0, {x, y});
      upper.update(proxies.tau_at(i, j) - proxies.theta_at(i, j), {x, y});
    }
  }
  const std::size_t limit = std::min<std::size_t>(m, 300);
  for (std::size_t i = 0; i < limit; ++i) {
    for (std::size_t j = 0; j < limit; ++j) {
      for (std::size_t k = 0; k < limit; ++k) {
        triangle.update(proxies.theta_at(i, k) + proxies.theta_at(k, j) - proxies.theta_at(i, j),
                        {proxies.proxies[i], proxies.proxies[k], proxies.proxies[j]});
      }
    }
  }
  rec.values["proxies"] = static_cast<double>(m);
  rec.values["triangle_checked_proxies"] = static_cast<double>(limit);
  if (m < 2) {
    rec.vacuous = true;
    rec.note = "fewer than two proxies";
    return rec;
  }
  if (limit < m) rec.note = "triangle inequality checked on the first 300 proxies";
  rec.values["min_lower_slack"] = lower.slack;
  rec.values["min_upper_slack"] = upper.slack;
  rec.values["min_triangle_slack"] = triangle.slack;
  rec.witnesses["lower"] = lower.witness;
  rec.witnesses["upper"] = upper.witness;
  rec.witnesses["triangle"] = triangle.witness;
  rec.require(lower.slack >= -kSlackTolerance && upper.slack >= -kSlackTolerance &&
              triangle.slack >= -kSlackTolerance);
  return rec;
}

CheckRecord check_boundary_quasi_isometry(const DeformedSpace& ds, const BoundaryProxySet& proxies) {
  const std::size_t m = proxies.size();
  if (m < 2) throw Error("check_boundary_quasi_isometry: need at least two proxies");
  CheckRecord rec{.name = "boundary_quasi_isometry"};
  MaxRatio worst;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double theta = proxies.theta_at(i, j);
      const double de = ds.distance(proxies.proxies[i], proxies.proxies[j]);
      worst.update(std::max(theta / de, de / theta), {proxies.proxies[i], proxies.proxies[j]});
    }
  }
  rec.values["m_emp"] = worst.value;
  rec.values["pairs"] = static_cast<double>(m * (m - 1) / 2);
  rec.witnesses["m_emp"] = worst.witness;
  rec.require(std::isfinite(worst.value));
  return rec;
}

CheckRecord check_gromov_to_cauchy(const DeformedSpace& ds, NodeId origin, std::span<const NodeId> u,
                                   std::span<const NodeId> v, double lemma_c) {
  if (u.size() < 3 || v.size() < 3) throw Error("check_gromov_to_cauchy: rays need at least 3 nodes");
  const auto& dist = ds.base_distance();
  const double eps = ds.epsilon();
  CheckRecord rec{.name = "gromov_to_cauchy"};

  auto products_increase = [&](std::span<const NodeId> ray) {
    for (std::size_t i = 2; i < ray.size(); ++i) {
      if (gromov_product(dist, ray[i - 1], ray[i], origin) < gromov_product(dist, ray[i - 2], ray[i - 1], origin)) {
        return false;
      }
    }
    return true;
  };
  const bool u_increasing = products_increase(u);
  const bool v_increasing = products_increase(v);

  const std::size_t count = std::min(u.size(), v.size());
  std::vector<double> gap(count), product(count);
  MinSlack consistency;
  for (std::size_t n = 0; n < count; ++n) {
    gap[n] = ds.distance(u[n], v[n]);
    product[n] = gromov_product(dist, u[n], v[n], origin);
    const double bound =
        std::exp(-eps * product[n]) * (2.0 * lemma_c / eps) * std::min(0.5, eps * dist(u[n], v[n]));
    consistency.update(bound - gap[n], {u[n], v[n]});
  }
  bool monotone = true;
  for (std::size_t n = 1; n < count; ++n) monotone = monotone && gap[n] <= gap[n - 1] + kSlackTolerance;

  const std::size_t last = count - 1;
  const std::size_t mid = last / 2;
  const double radial = dist(origin, u[last]) - dist(origin, u[mid]);
  const bool equivalent = product[last] - product[mid] >= 0.5 * radial - kSlackTolerance;
  const double floor = *std::min_element(gap.begin() + static_cast<std::ptrdiff_t>(mid), gap.end());
  const double largest = *std::max_element(gap.begin(), gap.end());

  rec.values["equivalent"] = equivalent ? 1.0 : 0.0;
  rec.values["distances_monotone"] = monotone ? 1.0 : 0.0;
  rec.values["gap_floor"] = floor;
  rec.values["last_gap"] = gap[last];
  rec.values["tail_contraction"] = largest > 0.0 ? gap[last] / largest : 0.0;
  rec.values["product_growth"] = product[last] - product[mid];
  rec.values["radial_growth"] = radial;
  rec.values["lemma_c"] = lemma_c;
  rec.values["min_consistency_slack"] = consistency.slack;
  rec.witnesses["consistency"] = consistency.witness;
  if (!u_increasing || !v_increasing) rec.note = "Gromov products do not increase along a ray";
  rec.require(u_increasing && v_increasing && consistency.slack >= -kSlackTolerance);
  return rec;
}

}  // namespace uniformize
