#include "uniformize/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string>

#include "uniformize/error.hpp"

namespace uniformize {

std::optional<std::string> GraphMetadata::find(const std::string& key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  return std::nullopt;
}

WeightedMetricGraph::WeightedMetricGraph(std::size_t node_count, std::vector<Edge> edges, NodeId base,
                                         std::vector<NodeId> frontier, GraphMetadata metadata)
    : edges_(std::move(edges)), base_(base), frontier_(std::move(frontier)), metadata_(std::move(metadata)) {
  if (node_count == 0) throw Error("graph must have at least one node");
  if (base >= node_count) throw Error("base point " + std::to_string(base) + " is not a node");

  std::vector<std::size_t> degree(node_count, 0);
  for (const auto& e : edges_) {
    if (e.u >= node_count || e.v >= node_count) {
      throw Error("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") references a missing node");
    }
    if (e.u == e.v) throw Error("self-loop at node " + std::to_string(e.u));
    if (!std::isfinite(e.length) || e.length <= 0.0) {
      throw Error("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") has non-positive length");
    }
    ++degree[e.u];
    ++degree[e.v];
  }

  adjacency_offsets_.assign(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) adjacency_offsets_[v + 1] = adjacency_offsets_[v] + degree[v];
  adjacency_.resize(adjacency_offsets_.back());
  std::vector<std::size_t> fill(adjacency_offsets_.begin(), adjacency_offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    adjacency_[fill[e.u]++] = {e.v, e.length, i};
    adjacency_[fill[e.v]++] = {e.u, e.length, i};
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(adjacency_offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(adjacency_offsets_[v + 1]);
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    auto dup = std::adjacent_find(first, last, [](const Neighbor& a, const Neighbor& b) { return a.node == b.node; });
    if (dup != last) {
      throw Error("parallel edges between " + std::to_string(v) + " and " + std::to_string(dup->node));
    }
  }

  // Connectivity by iterative DFS from the base point.
  std::vector<char> seen(node_count, 0);
  std::vector<NodeId> stack{base_};
  seen[base_] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (const auto& nb : neighbors(v)) {
      if (!seen[nb.node]) {
        seen[nb.node] = 1;
        ++reached;
        stack.push_back(nb.node);
      }
    }
  }
  if (reached != node_count) {
    throw Error("graph is disconnected: " + std::to_string(node_count - reached) +
                " node(s) unreachable from the base point");
  }

  std::sort(frontier_.begin(), frontier_.end());
  frontier_.erase(std::unique(frontier_.begin(), frontier_.end()), frontier_.end());
  if (!frontier_.empty() && frontier_.back() >= node_count) {
    throw Error("frontier node " + std::to_string(frontier_.back()) + " is not a node");
  }
}

std::optional<std::size_t> WeightedMetricGraph::edge_index(NodeId u, NodeId v) const {
  if (u >= size() || v >= size()) return std::nullopt;
  auto nbs = neighbors(u);
  auto it = std::lower_bound(nbs.begin(), nbs.end(), v, [](const Neighbor& n, NodeId id) { return n.node < id; });
  if (it == nbs.end() || it->node != v) return std::nullopt;
  return it->edge;
}

std::optional<double> WeightedMetricGraph::edge_length(NodeId u, NodeId v) const {
  auto idx = edge_index(u, v);
  if (!idx) return std::nullopt;
  return edges_[*idx].length;
}

bool WeightedMetricGraph::is_frontier(NodeId v) const {
  return std::binary_search(frontier_.begin(), frontier_.end(), v);
}

std::size_t WeightedMetricGraph::original_node_count() const {
  if (auto value = metadata_.find("original_nodes")) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(value->data(), value->data() + value->size(), n);
    if (ec == std::errc() && n <= size()) return n;
  }
  return size();
}

double WeightedMetricGraph::total_length() const {
  return std::accumulate(edges_.begin(), edges_.end(), 0.0, [](double acc, const Edge& e) { return acc + e.length; });
}

}  // namespace uniformize
