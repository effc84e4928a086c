#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "uniformize/graph.hpp"

namespace uniformize {

/// Dense symmetric node x node table of shortest-path distances.
class DistanceTable {
 public:
  DistanceTable() = default;
  DistanceTable(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {}

  std::size_t size() const { return n_; }
  double operator()(NodeId x, NodeId y) const { return values_[static_cast<std::size_t>(x) * n_ + y]; }
  std::span<const double> row(NodeId x) const { return {values_.data() + static_cast<std::size_t>(x) * n_, n_}; }
  double max() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

/// Dijkstra from one source. `weights` is indexed by edge; empty means the
/// graph's own edge lengths.
std::vector<double> single_source_distance(const WeightedMetricGraph& g, NodeId source,
                                           std::span<const double> weights = {});

/// Shortest-path metric on all pairs (one Dijkstra per source, rows in
/// parallel). The lower-id endpoint's row is mirrored into the upper one,
/// so the table is exactly symmetric and d(x, y) is accumulated outward
/// from min(x, y).
DistanceTable all_pairs_distance(const WeightedMetricGraph& g, std::span<const double> weights = {});

}  // namespace uniformize
