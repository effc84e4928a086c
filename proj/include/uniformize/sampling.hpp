#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uniformize/distance.hpp"
#include "uniformize/graph.hpp"

namespace uniformize {

struct PairSamplingOptions {
  /// Below this many candidate nodes every pair is taken.
  std::size_t full_limit = 200;
  std::size_t sample_size = 5000;
  std::uint64_t seed = 1;
  /// Restrict candidates to d(p, x) <= R/2 with R = min_f d(p, f). Without a
  /// frontier every node is a candidate.
  bool inner_only = false;
  /// In sampled mode, also add every (p, f) with f on the frontier.
  bool include_base_frontier = true;
};

/// Nodes with d(p, x) <= R/2, R the distance from p to the nearest frontier node.
std::vector<NodeId> inner_nodes(const WeightedMetricGraph& g, const DistanceTable& dist);

/// Unordered pairs (x < y). All pairs of candidates when there are at most
/// full_limit of them, otherwise sample_size distinct seeded pairs plus the
/// base-to-frontier pairs. Sorted; deterministic for a fixed seed.
std::vector<NodePair> sample_pairs(const WeightedMetricGraph& g, const DistanceTable& dist,
                                   const PairSamplingOptions& options);

}  // namespace uniformize
