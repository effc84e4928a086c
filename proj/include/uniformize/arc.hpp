#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "uniformize/distance.hpp"
#include "uniformize/graph.hpp"

namespace uniformize {

/// Absolute slack used by every inequality check.
inline constexpr double kSlackTolerance = 1e-9;

/// A walk through the graph with its arclength parametrization restricted to
/// vertices: cum_length()[i] is the length of the walk up to node i.
class ArcPath {
 public:
  ArcPath() = default;

  /// Validates that consecutive nodes are adjacent and accumulates lengths.
  static ArcPath from_nodes(const WeightedMetricGraph& g, std::vector<NodeId> nodes);

  std::span<const NodeId> nodes() const { return nodes_; }
  std::span<const double> cum_length() const { return cum_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  NodeId front() const { return nodes_.front(); }
  NodeId back() const { return nodes_.back(); }
  NodeId node(std::size_t i) const { return nodes_[i]; }
  double param(std::size_t i) const { return cum_[i]; }
  double length() const { return cum_.empty() ? 0.0 : cum_.back(); }

  /// l(arc) <= d(first, last) + h, up to kSlackTolerance.
  bool is_h_short(const DistanceTable& dist, double h) const;
  bool is_simple() const;

  /// Vertex whose parameter is closest to t (ties go to the lower index).
  std::size_t index_nearest(double t) const;
  /// Largest index whose parameter is <= t + kSlackTolerance.
  std::size_t last_index_within(double t) const;

  ArcPath reversed() const;

  bool operator==(const ArcPath& other) const { return nodes_ == other.nodes_; }

 private:
  std::vector<NodeId> nodes_;
  std::vector<double> cum_;
};

/// Shortest arc x -> y. Among equal-length candidates the lexicographically
/// smallest node sequence wins.
ArcPath shortest_arc(const WeightedMetricGraph& g, const DistanceTable& dist, NodeId x, NodeId y);

/// Simple arcs x -> y with length <= d(x, y) + h, in increasing length
/// (Yen's k-shortest simple paths), at most `limit` of them. The first one
/// is shortest_arc(g, dist, x, y).
std::vector<ArcPath> h_short_arcs(const WeightedMetricGraph& g, const DistanceTable& dist, NodeId x, NodeId y,
                                  double h, std::size_t limit);

}  // namespace uniformize
