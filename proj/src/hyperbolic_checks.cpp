#include "uniformize/hyperbolic_checks.hpp"

#include <cmath>
#include <limits>

#include "uniformize/error.hpp"
#include "uniformize/gromov.hpp"

namespace uniformize {

CheckRecord verify_tripod(const WeightedMetricGraph& g, const DistanceTable& dist, double delta, double h, NodeId a,
                          NodeId b1, NodeId b2, std::size_t arc_limit) {
  CheckRecord rec{.name = "tripod"};
  const auto arcs1 = h_short_arcs(g, dist, a, b1, h, arc_limit);
  const auto arcs2 = h_short_arcs(g, dist, a, b2, h, arc_limit);
  const double product = gromov_product(dist, b1, b2, a);

  MaxRatio same_distance, same_length;
  MinSlack slack_distance, slack_length;
  double max_gap = 0.0;
  std::size_t points = 0;
  for (const auto& first : arcs1) {
    for (const auto& second : arcs2) {
      for (std::size_t i = 0; i < first.size(); ++i) {
        const NodeId x1 = first.node(i);
        if (dist(x1, a) > product + kSlackTolerance) continue;
        ++points;
        std::size_t best = 0;
        double gap = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < second.size(); ++j) {
          const double candidate = std::abs(dist(second.node(j), a) - dist(x1, a));
          if (candidate < gap) {
            gap = candidate;
            best = j;
          }
        }
        const NodeId x2 = second.node(best);
        const std::size_t k = second.index_nearest(first.param(i));
        const NodeId x2p = second.node(k);
        const double gap_length = std::abs(second.param(k) - first.param(i));
        max_gap = std::max({max_gap, gap, gap_length});

        same_distance.update(dist(x1, x2), {x1, x2});
        same_length.update(dist(x1, x2p), {x1, x2p});
        slack_distance.update(4 * delta + h + gap - dist(x1, x2), {x1, x2});
        slack_length.update(4 * delta + 2 * h + gap_length - dist(x1, x2p), {x1, x2p});
      }
    }
  }

  rec.values["gromov_product"] = product;
  rec.values["bound_same_distance"] = 4 * delta + h;
  rec.values["bound_same_length"] = 4 * delta + 2 * h;
  rec.values["discretization_gap"] = max_gap;
  rec.values["points_checked"] = static_cast<double>(points);
  rec.values["arc_pairs"] = static_cast<double>(arcs1.size() * arcs2.size());
  if (points == 0) {
    rec.vacuous = true;
    rec.note = "no point within (b1|b2)_a on the first arc";
    return rec;
  }
  rec.values["max_same_distance"] = same_distance.value;
  rec.values["max_same_length"] = same_length.value;
  rec.values["min_slack_same_distance"] = slack_distance.slack;
  rec.values["min_slack_same_length"] = slack_length.slack;
  rec.witnesses["same_distance"] = same_distance.witness;
  rec.witnesses["same_length"] = same_length.witness;
  rec.require(slack_distance.slack >= -kSlackTolerance && slack_length.slack >= -kSlackTolerance);
  return rec;
}

CheckRecord verify_lemma_2_10(const DistanceTable& dist, double delta, double h, const ArcPath& arc, NodeId p) {
  if (arc.empty() || !arc.is_h_short(dist, h)) throw Error("verify_lemma_2_10: arc is not h-short");
  CheckRecord rec{.name = "lemma_2_10"};
  const NodeId x = arc.front();
  const NodeId y = arc.back();
  const double cut = arc.length() - gromov_product(dist, x, p, y);
  const std::size_t z_last = arc.param(0) <= cut + kSlackTolerance ? arc.last_index_within(cut) : 0;

  MinSlack slack;
  std::size_t pairs = 0;
  for (std::size_t zi = 0; zi <= z_last; ++zi) {
    const NodeId z = arc.node(zi);
    for (std::size_t ui = 0; ui <= zi; ++ui) {
      const NodeId u = arc.node(ui);
      ++pairs;
      slack.update(dist(p, u) - dist(p, z) - dist(u, z) + 8 * delta + 8 * h, {u, z});
    }
  }
  rec.values["y_gamma_param"] = cut;
  rec.values["pairs_checked"] = static_cast<double>(pairs);
  rec.values["min_slack"] = slack.slack;
  rec.witnesses["min_slack"] = slack.witness;
  rec.require(slack.slack >= -kSlackTolerance);
  return rec;
}

}  // namespace uniformize
