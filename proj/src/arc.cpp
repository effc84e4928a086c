#include "uniformize/arc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <string>

#include "uniformize/error.hpp"

namespace uniformize {

ArcPath ArcPath::from_nodes(const WeightedMetricGraph& g, std::vector<NodeId> nodes) {
  ArcPath arc;
  if (nodes.empty()) return arc;
  arc.cum_.reserve(nodes.size());
  arc.cum_.push_back(0.0);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    auto len = g.edge_length(nodes[i - 1], nodes[i]);
    if (!len) {
      throw Error("arc step " + std::to_string(nodes[i - 1]) + " -> " + std::to_string(nodes[i]) +
                  " is not an edge");
    }
    arc.cum_.push_back(arc.cum_.back() + *len);
  }
  arc.nodes_ = std::move(nodes);
  return arc;
}

bool ArcPath::is_h_short(const DistanceTable& dist, double h) const {
  if (empty()) return false;
  return length() <= dist(front(), back()) + h + kSlackTolerance;
}

bool ArcPath::is_simple() const {
  std::vector<NodeId> sorted(nodes_);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::size_t ArcPath::index_nearest(double t) const {
  auto it = std::lower_bound(cum_.begin(), cum_.end(), t);
  if (it == cum_.end()) return cum_.size() - 1;
  auto idx = static_cast<std::size_t>(it - cum_.begin());
  if (idx > 0 && (t - cum_[idx - 1]) <= (cum_[idx] - t)) return idx - 1;
  return idx;
}

std::size_t ArcPath::last_index_within(double t) const {
  auto it = std::upper_bound(cum_.begin(), cum_.end(), t + kSlackTolerance);
  return it == cum_.begin() ? 0 : static_cast<std::size_t>(it - cum_.begin()) - 1;
}

ArcPath ArcPath::reversed() const {
  ArcPath out;
  out.nodes_.assign(nodes_.rbegin(), nodes_.rend());
  out.cum_.reserve(cum_.size());
  const double total = length();
  for (auto it = cum_.rbegin(); it != cum_.rend(); ++it) out.cum_.push_back(total - *it);
  return out;
}

namespace {

bool on_shortest_step(double from, double step, double to) {
  return std::abs(from - (step + to)) <= 1e-10 * std::max(1.0, from) && to < from;
}

/// Lexicographically smallest shortest path src -> dst avoiding blocked
/// nodes and edges; nullopt if dst is unreachable.
std::optional<std::vector<NodeId>> lex_shortest_path(const WeightedMetricGraph& g, NodeId src, NodeId dst,
                                                     const std::vector<char>& blocked_nodes,
                                                     const std::set<std::size_t>& blocked_edges) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> to_dst(g.size(), inf);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  to_dst[dst] = 0.0;
  queue.emplace(0.0, dst);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > to_dst[v]) continue;
    for (const auto& nb : g.neighbors(v)) {
      if (blocked_nodes[nb.node] || blocked_edges.count(nb.edge)) continue;
      const double candidate = d + nb.length;
      if (candidate < to_dst[nb.node]) {
        to_dst[nb.node] = candidate;
        queue.emplace(candidate, nb.node);
      }
    }
  }
  if (!std::isfinite(to_dst[src])) return std::nullopt;

  std::vector<NodeId> path{src};
  NodeId at = src;
  while (at != dst) {
    std::optional<NodeId> next;
    for (const auto& nb : g.neighbors(at)) {  // sorted by id
      if (blocked_nodes[nb.node] || blocked_edges.count(nb.edge)) continue;
      if (on_shortest_step(to_dst[at], nb.length, to_dst[nb.node])) {
        next = nb.node;
        break;
      }
    }
    if (!next) throw Error("internal: shortest path reconstruction failed");
    path.push_back(*next);
    at = *next;
  }
  return path;
}

}  // namespace

ArcPath shortest_arc(const WeightedMetricGraph& g, const DistanceTable& dist, NodeId x, NodeId y) {
  if (x >= g.size() || y >= g.size()) throw Error("shortest_arc: node out of range");
  std::vector<NodeId> path{x};
  NodeId at = x;
  while (at != y) {
    std::optional<NodeId> next;
    for (const auto& nb : g.neighbors(at)) {
      if (on_shortest_step(dist(at, y), nb.length, dist(nb.node, y))) {
        next = nb.node;
        break;
      }
    }
    if (!next) throw Error("shortest_arc: distance table inconsistent with graph");
    path.push_back(*next);
    at = *next;
  }
  return ArcPath::from_nodes(g, std::move(path));
}

std::vector<ArcPath> h_short_arcs(const WeightedMetricGraph& g, const DistanceTable& dist, NodeId x, NodeId y,
                                  double h, std::size_t limit) {
  if (h < 0.0) throw Error("h_short_arcs: h must be nonnegative");
  std::vector<ArcPath> accepted;
  if (limit == 0) return accepted;
  const double cutoff = dist(x, y) + h + kSlackTolerance;

  accepted.push_back(shortest_arc(g, dist, x, y));
  std::set<std::vector<NodeId>> known{std::vector<NodeId>(accepted[0].nodes().begin(), accepted[0].nodes().end())};
  // Candidates ordered by (length, node sequence).
  std::set<std::pair<double, std::vector<NodeId>>> candidates;

  std::vector<char> blocked_nodes(g.size(), 0);
  while (accepted.size() < limit) {
    const ArcPath& last = accepted.back();
    for (std::size_t i = 0; i + 1 < last.size(); ++i) {
      const NodeId spur = last.node(i);
      std::set<std::size_t> blocked_edges;
      for (const auto& arc : accepted) {
        if (arc.size() > i + 1 && std::equal(arc.nodes().begin(), arc.nodes().begin() + static_cast<std::ptrdiff_t>(i + 1),
                                             last.nodes().begin())) {
          blocked_edges.insert(*g.edge_index(arc.node(i), arc.node(i + 1)));
        }
      }
      std::fill(blocked_nodes.begin(), blocked_nodes.end(), 0);
      for (std::size_t r = 0; r < i; ++r) blocked_nodes[last.node(r)] = 1;

      auto spur_path = lex_shortest_path(g, spur, y, blocked_nodes, blocked_edges);
      if (!spur_path) continue;
      std::vector<NodeId> total(last.nodes().begin(), last.nodes().begin() + static_cast<std::ptrdiff_t>(i));
      total.insert(total.end(), spur_path->begin(), spur_path->end());
      if (known.count(total)) continue;
      ArcPath candidate = ArcPath::from_nodes(g, total);
      if (candidate.length() > cutoff) continue;
      known.insert(total);
      candidates.emplace(candidate.length(), std::move(total));
    }
    if (candidates.empty()) break;
    auto best = candidates.begin();
    accepted.push_back(ArcPath::from_nodes(g, best->second));
    candidates.erase(best);
  }
  return accepted;
}

}  // namespace uniformize
