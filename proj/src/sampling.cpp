#include "uniformize/sampling.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "uniformize/arc.hpp"

namespace uniformize {

std::vector<NodeId> inner_nodes(const WeightedMetricGraph& g, const DistanceTable& dist) {
  const NodeId p = g.base();
  double radius = std::numeric_limits<double>::infinity();
  for (NodeId f : g.frontier()) radius = std::min(radius, dist(p, f));
  std::vector<NodeId> out;
  for (NodeId x = 0; x < g.size(); ++x) {
    if (dist(p, x) <= radius / 2.0 + kSlackTolerance) out.push_back(x);
  }
  return out;
}

std::vector<NodePair> sample_pairs(const WeightedMetricGraph& g, const DistanceTable& dist,
                                   const PairSamplingOptions& options) {
  std::vector<NodeId> candidates;
  if (options.inner_only) {
    candidates = inner_nodes(g, dist);
  } else {
    candidates.resize(g.size());
    for (NodeId x = 0; x < g.size(); ++x) candidates[x] = x;
  }

  const std::size_t m = candidates.size();
  std::vector<NodePair> pairs;
  if (m <= options.full_limit) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(candidates[i], candidates[j]);
    }
    return pairs;
  }

  std::set<NodePair> chosen;
  const std::size_t available = m * (m - 1) / 2;
  const std::size_t target = std::min(options.sample_size, available);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  while (chosen.size() < target) {
    const NodeId a = candidates[pick(rng)];
    const NodeId b = candidates[pick(rng)];
    if (a == b) continue;
    chosen.emplace(std::min(a, b), std::max(a, b));
  }
  if (options.include_base_frontier) {
    const NodeId p = g.base();
    for (NodeId f : g.frontier()) {
      if (f != p) chosen.emplace(std::min(p, f), std::max(p, f));
    }
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace uniformize
