#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace uniformize {

using NodeId = std::uint32_t;
using NodePair = std::pair<NodeId, NodeId>;

struct Edge {
  NodeId u;
  NodeId v;
  double length;
};

struct Neighbor {
  NodeId node;
  double length;
  std::size_t edge;  // index into WeightedMetricGraph::edges()
};

/// Name of the generator plus its parameters, in insertion order.
struct GraphMetadata {
  std::string generator;
  std::vector<std::pair<std::string, std::string>> params;

  std::optional<std::string> find(const std::string& key) const;
  bool operator==(const GraphMetadata&) const = default;
};

/// A finite, connected, positively weighted graph standing in for a
/// truncated intrinsic space. Nodes are 0..size()-1. Immutable once built;
/// the constructor rejects anything that would not give a metric.
class WeightedMetricGraph {
 public:
  WeightedMetricGraph(std::size_t node_count, std::vector<Edge> edges, NodeId base,
                      std::vector<NodeId> frontier = {}, GraphMetadata metadata = {});

  std::size_t size() const { return adjacency_offsets_.size() - 1; }
  std::span<const Edge> edges() const { return edges_; }

  /// Neighbors sorted by node id.
  std::span<const Neighbor> neighbors(NodeId v) const {
    return {adjacency_.data() + adjacency_offsets_[v],
            adjacency_offsets_[v + 1] - adjacency_offsets_[v]};
  }

  std::optional<double> edge_length(NodeId u, NodeId v) const;
  std::optional<std::size_t> edge_index(NodeId u, NodeId v) const;

  NodeId base() const { return base_; }
  /// Sorted, without duplicates.
  std::span<const NodeId> frontier() const { return frontier_; }
  bool is_frontier(NodeId v) const;
  const GraphMetadata& metadata() const { return metadata_; }

  /// Number of nodes that existed before edge subdivision (ids 0..n-1);
  /// equals size() for graphs that were never subdivided.
  std::size_t original_node_count() const;

  double total_length() const;

 private:
  std::vector<Edge> edges_;
  std::vector<Neighbor> adjacency_;
  std::vector<std::size_t> adjacency_offsets_;
  NodeId base_;
  std::vector<NodeId> frontier_;
  GraphMetadata metadata_;
};

}  // namespace uniformize
