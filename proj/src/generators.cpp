#include "uniformize/generators.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "uniformize/error.hpp"
#include "uniformize/format.hpp"

namespace uniformize {
namespace {

struct RawGraph {
  std::size_t nodes = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
  NodeId base = 0;
  std::vector<NodeId> frontier;
  GraphMetadata metadata;
};

RawGraph make_tree(const RegularTree& t) {
  if (t.branching < 2) throw Error("regular tree needs branching >= 2");
  if (t.radius < 1) throw Error("regular tree needs radius >= 1");
  RawGraph raw;
  raw.metadata.generator = "regular-tree";
  raw.metadata.params = {{"branching", std::to_string(t.branching)}, {"radius", std::to_string(t.radius)}};
  std::size_t level_start = 0;
  std::size_t level_size = 1;
  raw.nodes = 1;
  for (int depth = 1; depth <= t.radius; ++depth) {
    const std::size_t next_start = raw.nodes;
    for (std::size_t i = 0; i < level_size; ++i) {
      for (int c = 0; c < t.branching; ++c) {
        raw.edges.emplace_back(static_cast<NodeId>(level_start + i), static_cast<NodeId>(raw.nodes++));
      }
    }
    level_start = next_start;
    level_size *= static_cast<std::size_t>(t.branching);
    if (raw.nodes > 20'000'000) throw Error("regular tree too large");
  }
  for (std::size_t v = level_start; v < raw.nodes; ++v) raw.frontier.push_back(static_cast<NodeId>(v));
  return raw;
}

/// Grows the {p,q} tiling around a vertex one layer of faces at a time.
/// The patch is a disk whose boundary is kept as a cycle together with the
/// number of faces each boundary vertex already has.
class TilingBuilder {
 public:
  TilingBuilder(int p, int q) : p_(p), q_(q) {}

  void seed() {
    faces_.assign(1, q_);  // the centre vertex is complete
    boundary_.clear();
    std::vector<NodeId> spokes;
    for (int i = 0; i < q_; ++i) {
      spokes.push_back(add_vertex(0));
      add_edge(0, spokes.back());
    }
    for (int i = 0; i < q_; ++i) {
      const NodeId from = spokes[static_cast<std::size_t>(i)];
      const NodeId to = spokes[static_cast<std::size_t>((i + 1) % q_)];
      boundary_.push_back(from);
      faces_[from] += 1;
      faces_[to] += 1;
      auto chain = link_chain(from, to, p_ - 3);
      boundary_.insert(boundary_.end(), chain.begin(), chain.end());
    }
  }

  void expand() {
    struct Spoke {
      std::size_t boundary_index;
      NodeId tip;
    };
    std::vector<Spoke> spokes;
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
      const NodeId v = boundary_[i];
      const int count = q_ - faces_[v] - 1;
      if (count < 0) throw Error("tiling construction: vertex over-saturated");
      for (int k = 0; k < count; ++k) {
        spokes.push_back({i, add_vertex(0)});
        add_edge(v, spokes.back().tip);
      }
    }
    if (spokes.size() < 2) throw Error("tiling construction: boundary closed up");
    for (auto v : boundary_) faces_[v] = q_;

    // Face j lies between spoke j and spoke j+1 and holds the boundary run
    // from spoke j's root to spoke j+1's root.
    const std::size_t s = spokes.size();
    const std::size_t b = boundary_.size();
    std::vector<int> extra(s);
    for (std::size_t j = 0; j < s; ++j) {
      const std::size_t from = spokes[j].boundary_index;
      const std::size_t to = spokes[(j + 1) % s].boundary_index;
      std::size_t run = (to + b - from) % b + 1;
      if (s == 1) run = b + 1;
      extra[j] = p_ - static_cast<int>(run) - 2;
      if (extra[j] < -1) throw Error("tiling construction: face overflow");
    }
    // Merge spoke tips of faces that close without new vertices.
    std::vector<NodeId> tip(s);
    for (std::size_t j = 0; j < s; ++j) tip[j] = spokes[j].tip;
    std::vector<std::size_t> alias(s);
    std::iota(alias.begin(), alias.end(), 0);
    for (std::size_t j = 0; j < s; ++j) {
      if (extra[j] == -1) alias[(j + 1) % s] = alias[j];
    }
    for (std::size_t j = 0; j < s; ++j) {
      std::size_t root = j;
      while (alias[root] != root) root = alias[root];
      if (root != j) retarget_spoke(spokes[j].tip, tip[root]);
      tip[j] = tip[root];
    }

    std::vector<NodeId> next;
    for (std::size_t j = 0; j < s; ++j) {
      const NodeId from = tip[j];
      const NodeId to = tip[(j + 1) % s];
      faces_[from] += 1;
      if (extra[j] == -1) continue;
      faces_[to] += 1;
      next.push_back(from);
      auto chain = link_chain(from, to, extra[j]);
      next.insert(next.end(), chain.begin(), chain.end());
    }
    boundary_ = std::move(next);
    if (faces_.size() > 5'000'000) throw Error("tiling too large");
  }

  std::size_t vertex_count() const { return faces_.size(); }
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

 private:
  NodeId add_vertex(int faces) {
    faces_.push_back(faces);
    return static_cast<NodeId>(faces_.size() - 1);
  }
  void add_edge(NodeId u, NodeId v) { edges_.emplace_back(u, v); }

  /// Spoke tips are always the most recently created edges' endpoints;
  /// merging redirects the spoke and drops the orphaned vertex id (it stays
  /// isolated and is filtered by the ball extraction).
  void retarget_spoke(NodeId old_tip, NodeId new_tip) {
    for (auto it = edges_.rbegin(); it != edges_.rend(); ++it) {
      if (it->second == old_tip) {
        it->second = new_tip;
        return;
      }
    }
  }

  std::vector<NodeId> link_chain(NodeId from, NodeId to, int count) {
    std::vector<NodeId> chain;
    NodeId prev = from;
    for (int k = 0; k < count; ++k) {
      const NodeId v = add_vertex(1);
      add_edge(prev, v);
      chain.push_back(v);
      prev = v;
    }
    add_edge(prev, to);
    return chain;
  }

  int p_;
  int q_;
  std::vector<int> faces_;
  std::vector<NodeId> boundary_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
};

RawGraph make_tiling(const HyperbolicTiling& t) {
  if (t.p < 3 || t.q < 3 || t.p * t.q <= 2 * (t.p + t.q)) {
    throw Error("{" + std::to_string(t.p) + "," + std::to_string(t.q) + "} tiling is not hyperbolic");
  }
  if (t.rings < 1) throw Error("tiling needs rings >= 1");
  TilingBuilder builder(t.p, t.q);
  builder.seed();
  // After k layers every vertex within distance k of the centre exists.
  for (int layer = 1; layer < t.rings; ++layer) builder.expand();

  const std::size_t n = builder.vertex_count();
  std::vector<std::vector<NodeId>> adj(n);
  for (auto [u, v] : builder.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  // Breadth-first ball of radius `rings`, relabelled in BFS order.
  std::vector<int> depth(n, -1);
  std::vector<NodeId> order{0};
  depth[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId v = order[head];
    if (depth[v] == t.rings) continue;
    for (NodeId w : adj[v]) {
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        order.push_back(w);
      }
    }
  }
  std::vector<NodeId> label(n, static_cast<NodeId>(-1));
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<NodeId>(i);

  RawGraph raw;
  raw.metadata.generator = "hyperbolic-tiling";
  raw.metadata.params = {{"p", std::to_string(t.p)}, {"q", std::to_string(t.q)}, {"rings", std::to_string(t.rings)}};
  raw.nodes = order.size();
  for (auto [u, v] : builder.edges()) {
    if (depth[u] >= 0 && depth[v] >= 0) raw.edges.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
  }
  std::sort(raw.edges.begin(), raw.edges.end());
  for (NodeId v : order) {
    if (depth[v] == t.rings) raw.frontier.push_back(label[v]);
  }
  return raw;
}

RawGraph make_grid(const EuclideanGrid& spec) {
  if (spec.n < 2) throw Error("grid needs n >= 2");
  const auto n = static_cast<NodeId>(spec.n);
  RawGraph raw;
  raw.metadata.generator = "euclidean-grid";
  raw.metadata.params = {{"n", std::to_string(spec.n)}};
  raw.nodes = static_cast<std::size_t>(n) * n;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      const NodeId v = i * n + j;
      if (j + 1 < n) raw.edges.emplace_back(v, v + 1);
      if (i + 1 < n) raw.edges.emplace_back(v, v + n);
      if (i == 0 || j == 0 || i + 1 == n || j + 1 == n) raw.frontier.push_back(v);
    }
  }
  raw.base = (n / 2) * n + n / 2;
  return raw;
}

RawGraph make_gnp(const RandomGnp& spec) {
  if (spec.n < 1) throw Error("random graph needs n >= 1");
  if (!(spec.prob >= 0.0 && spec.prob <= 1.0)) throw Error("random graph needs 0 <= prob <= 1");
  RawGraph raw;
  raw.metadata.generator = "random-gnp";
  raw.metadata.params = {{"n", std::to_string(spec.n)},
                         {"prob", format_double(spec.prob)},
                         {"seed", std::to_string(spec.seed)}};
  const auto n = static_cast<NodeId>(spec.n);
  raw.nodes = n;
  std::mt19937_64 rng(spec.seed);
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < spec.prob) {
        raw.edges.emplace_back(u, v);
        parent[find(u)] = find(v);
      }
    }
  }
  // Chain the components together through their smallest nodes.
  std::vector<NodeId> reps;
  std::vector<char> seen(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    const NodeId r = find(v);
    if (!seen[r]) {
      seen[r] = 1;
      reps.push_back(v);
    }
  }
  for (std::size_t i = 1; i < reps.size(); ++i) raw.edges.emplace_back(reps[i - 1], reps[i]);
  return raw;
}

}  // namespace

std::string generator_name(const GeneratorSpec& spec) {
  switch (spec.kind.index()) {
    case 0: return "regular-tree";
    case 1: return "hyperbolic-tiling";
    case 2: return "euclidean-grid";
    default: return "random-gnp";
  }
}

WeightedMetricGraph generate(const GeneratorSpec& spec) {
  if (!(spec.edge_length > 0.0)) throw Error("edge_length must be positive");
  if (spec.subdivision < 1) throw Error("subdivision must be a positive integer");

  RawGraph raw = std::visit(
      [](const auto& kind) -> RawGraph {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, RegularTree>) return make_tree(kind);
        else if constexpr (std::is_same_v<T, HyperbolicTiling>) return make_tiling(kind);
        else if constexpr (std::is_same_v<T, EuclideanGrid>) return make_grid(kind);
        else return make_gnp(kind);
      },
      spec.kind);

  const std::size_t original = raw.nodes;
  const auto k = static_cast<std::size_t>(spec.subdivision);
  const double piece = spec.edge_length / static_cast<double>(k);
  std::vector<Edge> edges;
  edges.reserve(raw.edges.size() * k);
  std::size_t next = original;
  for (auto [u, v] : raw.edges) {
    NodeId prev = u;
    for (std::size_t s = 1; s < k; ++s) {
      const auto mid = static_cast<NodeId>(next++);
      edges.push_back({prev, mid, piece});
      prev = mid;
    }
    edges.push_back({prev, v, piece});
  }
  raw.metadata.params.emplace_back("edge_length", format_double(spec.edge_length));
  raw.metadata.params.emplace_back("subdivision", std::to_string(spec.subdivision));
  raw.metadata.params.emplace_back("original_nodes", std::to_string(original));
  return WeightedMetricGraph(next, std::move(edges), raw.base, std::move(raw.frontier), std::move(raw.metadata));
}

}  // namespace uniformize
