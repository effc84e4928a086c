#include "uniformize/uniformity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uniformize/error.hpp"
#include "uniformize/gromov.hpp"
#include "uniformize/parallel.hpp"

namespace uniformize {

namespace {

std::vector<ArcPath> candidate_arcs(const DeformedSpace& ds, NodeId x, NodeId y, double h, std::size_t limit) {
  const auto& g = ds.graph();
  const auto& dist = ds.base_distance();
  if (limit <= 1) return {shortest_arc(g, dist, x, y)};
  auto arcs = h_short_arcs(g, dist, x, y, h, limit);
  std::erase_if(arcs, [&](const ArcPath& a) { return a.length() > 2.0 * dist(x, y) + kSlackTolerance; });
  return arcs;
}

UniformityRow measure_arc(const DeformedSpace& ds, const ArcPath& arc) {
  const auto& dist = ds.base_distance();
  const NodeId x = arc.front();
  const NodeId y = arc.back();
  const NodeId p = ds.graph().base();
  UniformityRow row{.x = x, .y = y, .arc = {arc.nodes().begin(), arc.nodes().end()}};
  row.quasiconvex = ds.deformed_length(arc) / ds.distance(x, y);

  const auto prefix = ds.deformed_prefix(arc);
  const double cut = arc.length() - gromov_product(dist, x, p, y);
  double worst = -1.0;
  for (std::size_t k = 1; k + 1 < arc.size(); ++k) {
    const NodeId z = arc.node(k);
    const double shorter = std::min(prefix[k], prefix.back() - prefix[k]);
    const double room = ds.frontier_distance(z);
    const double ratio = room > 0.0 ? shorter / room : std::numeric_limits<double>::infinity();
    if (arc.param(k) <= cut + kSlackTolerance) {
      row.cone_near = std::max(row.cone_near, ratio);
    } else {
      row.cone_far = std::max(row.cone_far, ratio);
    }
    if (ratio > worst) {
      worst = ratio;
      row.cone_witness = z;
    }
  }
  return row;
}

}  // namespace

UniformityReport verify_uniform(const DeformedSpace& ds, std::span<const NodePair> pairs,
                                const UniformityOptions& options) {
  if (ds.graph().frontier().empty()) throw Error("verify_uniform: no boundary proxy (empty frontier)");
  if (pairs.empty()) throw Error("verify_uniform: empty pair sample");
  if (options.h < 0.0) throw Error("verify_uniform: h must be nonnegative");

  UniformityReport report;
  report.rows.resize(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto [x, y] = pairs[i];
    if (x == y) {
      report.rows[i] = UniformityRow{.x = x, .y = y, .degenerate = true};
      return;
    }
    bool first = true;
    for (const auto& arc : candidate_arcs(ds, x, y, options.h, options.arc_limit)) {
      UniformityRow row = measure_arc(ds, arc);
      const auto& best = report.rows[i];
      const double score = std::max({row.quasiconvex, row.cone_near, row.cone_far});
      if (first || score > std::max({best.quasiconvex, best.cone_near, best.cone_far})) report.rows[i] = std::move(row);
      first = false;
    }
  });

  MaxRatio qc, cone, near, far;
  MinSlack qc_floor;
  for (const auto& row : report.rows) {
    if (row.degenerate) {
      ++report.degenerate;
      continue;
    }
    qc.update(row.quasiconvex, {row.x, row.y});
    qc_floor.update(row.quasiconvex - 1.0, {row.x, row.y});
    near.update(row.cone_near, {row.x, row.y, row.cone_witness});
    far.update(row.cone_far, {row.x, row.y, row.cone_witness});
    cone.update(std::max(row.cone_near, row.cone_far), {row.x, row.y, row.cone_witness});
  }
  const double eps = ds.epsilon();
  report.a_quasiconvex = qc.value;
  report.a_cone_near = near.value;
  report.a_cone_far = far.value;
  report.a_cone = cone.value;
  report.a = std::max(qc.value, cone.value);
  report.bound = std::exp(options.delta * eps + 9.0 * options.h * eps + 1.0);

  auto& rec = report.record;
  rec.name = "uniformity";
  rec.values["a_quasiconvex"] = report.a_quasiconvex;
  rec.values["a_cone"] = report.a_cone;
  rec.values["a_cone_near_half"] = report.a_cone_near;
  rec.values["a_cone_far_half"] = report.a_cone_far;
  rec.values["a"] = report.a;
  rec.values["cone_bound"] = report.bound;
  rec.values["pairs"] = static_cast<double>(pairs.size());
  rec.values["degenerate_pairs"] = static_cast<double>(report.degenerate);
  rec.witnesses["a_quasiconvex"] = qc.witness;
  rec.witnesses["a_cone"] = cone.witness;
  if (!qc.seen) {
    rec.vacuous = true;
    rec.note = "every sampled pair is degenerate";
    return report;
  }
  if (options.informational) {
    rec.status = CheckStatus::kInfo;
    rec.note = "control space: no hyperbolicity assumption, bound not asserted";
    return report;
  }
  if (eps * options.delta >= 0.2) {
    rec.status = CheckStatus::kSkipped;
    rec.note = "eps * delta >= 1/5: cone bound not asserted";
    return report;
  }
  rec.require(qc_floor.slack >= -kSlackTolerance);
  rec.require(std::isfinite(report.a_cone) && report.a_cone <= report.bound + kSlackTolerance);
  return report;
}

GehringHaymanReport verify_gehring_hayman(const DeformedSpace& ds, std::span<const NodePair> pairs, double h,
                                          std::size_t arc_limit) {
  if (!(h >= 0.0) || h >= 1.0 / 13.0) throw Error("verify_gehring_hayman: h must lie in [0, 1/13)");
  if (pairs.empty()) throw Error("verify_gehring_hayman: empty pair sample");

  GehringHaymanReport report;
  std::vector<double> ratios(pairs.size(), 0.0);
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto [x, y] = pairs[i];
    if (x == y) return;
    for (const auto& arc : candidate_arcs(ds, x, y, h, arc_limit)) {
      ratios[i] = std::max(ratios[i], ds.deformed_length(arc) / ds.distance(x, y));
    }
  });

  MaxRatio worst;
  MinSlack floor;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [x, y] = pairs[i];
    if (x == y) continue;
    report.rows.push_back({x, y, ratios[i]});
    worst.update(ratios[i], {x, y});
    floor.update(ratios[i] - 1.0, {x, y});
  }
  report.k_emp = worst.value;

  auto& rec = report.record;
  rec.name = "gehring_hayman";
  rec.values["k_emp"] = worst.value;
  rec.values["h"] = h;
  rec.values["pairs"] = static_cast<double>(report.rows.size());
  rec.witnesses["k_emp"] = worst.witness;
  if (!worst.seen) {
    rec.vacuous = true;
    rec.note = "every sampled pair is degenerate";
    return report;
  }
  rec.values["min_ratio"] = floor.slack + 1.0;
  rec.require(std::isfinite(worst.value) && floor.slack >= -kSlackTolerance);
  return report;
}

double relative_spread(std::span<const double> values) {
  if (values.empty()) throw Error("relative_spread: no values");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return (*hi - *lo) / *lo;
}

}  // namespace uniformize
