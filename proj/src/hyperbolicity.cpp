#include "uniformize/hyperbolicity.hpp"

#include <algorithm>
#include <string>

#include "uniformize/error.hpp"
#include "uniformize/parallel.hpp"

namespace uniformize {

double four_point_defect(const DistanceTable& dist, NodeId x, NodeId y, NodeId z, NodeId p) {
  const double a = dist(x, z) + dist(y, p);
  const double b = dist(x, y) + dist(z, p);
  const double c = dist(y, z) + dist(x, p);
  const double defect = 0.5 * (a - std::max(b, c));
  return defect > 0.0 ? defect : 0.0;
}

namespace {

struct Block {
  std::vector<NodeId> vertices;
  std::vector<std::size_t> edges;
};

std::vector<Block> compute_blocks(const WeightedMetricGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<std::size_t> edge_stack;
  std::vector<Block> blocks;

  struct Frame {
    NodeId v;
    std::size_t parent_edge;
    std::size_t next;
  };
  constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);
  std::vector<Frame> frames;
  const NodeId root = g.base();
  disc[root] = low[root] = ++timer;
  frames.push_back({root, kNoEdge, 0});

  while (!frames.empty()) {
    Frame& f = frames.back();
    auto nbs = g.neighbors(f.v);
    if (f.next < nbs.size()) {
      const Neighbor nb = nbs[f.next++];
      if (nb.edge == f.parent_edge) continue;
      if (disc[nb.node] == 0) {
        edge_stack.push_back(nb.edge);
        disc[nb.node] = low[nb.node] = ++timer;
        frames.push_back({nb.node, nb.edge, 0});
      } else if (disc[nb.node] < disc[f.v]) {
        edge_stack.push_back(nb.edge);
        low[f.v] = std::min(low[f.v], disc[nb.node]);
      }
      continue;
    }
    const Frame done = f;
    frames.pop_back();
    if (frames.empty()) break;
    const NodeId u = frames.back().v;
    low[u] = std::min(low[u], low[done.v]);
    if (low[done.v] >= disc[u]) {
      Block block;
      while (true) {
        const std::size_t e = edge_stack.back();
        edge_stack.pop_back();
        block.edges.push_back(e);
        block.vertices.push_back(g.edges()[e].u);
        block.vertices.push_back(g.edges()[e].v);
        if (e == done.parent_edge) break;
      }
      std::sort(block.vertices.begin(), block.vertices.end());
      block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()), block.vertices.end());
      std::sort(block.edges.begin(), block.edges.end());
      blocks.push_back(std::move(block));
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  return blocks;
}

/// Block-local view: the induced metric of a block equals the ambient one.
struct BlockMetric {
  std::vector<NodeId> vertices;  // local id -> global id
  DistanceTable dist;            // local ids
};

BlockMetric block_metric(const WeightedMetricGraph& g, const Block& block) {
  auto local = [&](NodeId v) {
    return static_cast<NodeId>(std::lower_bound(block.vertices.begin(), block.vertices.end(), v) -
                               block.vertices.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(block.edges.size());
  for (auto e : block.edges) {
    const auto& edge = g.edges()[e];
    edges.push_back({local(edge.u), local(edge.v), edge.length});
  }
  WeightedMetricGraph sub(block.vertices.size(), std::move(edges), 0);
  return {block.vertices, all_pairs_distance(sub)};
}

struct Best {
  double value = 0.0;
  Quadruple witness;
  bool found = false;
};

void consider(Best& best, double value, const Quadruple& q) {
  if (value > best.value || (!best.found && value >= best.value)) {
    best.value = value;
    best.witness = q;
    best.found = true;
  }
}

/// Orders {a, b, c; p} so that the largest pair sum is d(x,z) + d(y,p).
/// Returns the clamped defect.
double oriented_defect(const DistanceTable& d, NodeId a, NodeId b, NodeId c, NodeId p, Quadruple& out) {
  const double s_ab = d(a, b) + d(c, p);
  const double s_ac = d(a, c) + d(b, p);
  const double s_bc = d(b, c) + d(a, p);
  double largest, second;
  if (s_ab >= s_ac && s_ab >= s_bc) {
    out = {a, c, b, p};
    largest = s_ab;
    second = std::max(s_ac, s_bc);
  } else if (s_ac >= s_bc) {
    out = {a, b, c, p};
    largest = s_ac;
    second = std::max(s_ab, s_bc);
  } else {
    out = {b, a, c, p};
    largest = s_bc;
    second = std::max(s_ab, s_ac);
  }
  const double defect = 0.5 * (largest - second);
  return defect > 0.0 ? defect : 0.0;
}

Best scan_block_global(const BlockMetric& bm) {
  const std::size_t m = bm.vertices.size();
  std::vector<Best> per_a(m);
  parallel_for(m, [&](std::size_t ai) {
    Best local;
    const auto a = static_cast<NodeId>(ai);
    Quadruple q;
    for (NodeId b = a + 1; b < m; ++b)
      for (NodeId c = b + 1; c < m; ++c)
        for (NodeId p = c + 1; p < m; ++p) {
          const double defect = oriented_defect(bm.dist, a, b, c, p, q);
          if (defect > local.value || !local.found) consider(local, defect, q);
        }
    per_a[ai] = local;
  });
  Best best;
  for (const auto& candidate : per_a) {
    if (candidate.found) consider(best, candidate.value, candidate.witness);
  }
  if (best.found) {
    auto& w = best.witness;
    w = {bm.vertices[w.x], bm.vertices[w.y], bm.vertices[w.z], bm.vertices[w.p]};
  }
  return best;
}

Best scan_block_base(const BlockMetric& bm, NodeId local_gate) {
  const std::size_t m = bm.vertices.size();
  std::vector<Best> per_x(m);
  parallel_for(m, [&](std::size_t xi) {
    Best local;
    const auto x = static_cast<NodeId>(xi);
    if (x == local_gate) return;
    Quadruple q;
    for (NodeId y = x + 1; y < m; ++y) {
      if (y == local_gate) continue;
      for (NodeId z = y + 1; z < m; ++z) {
        if (z == local_gate) continue;
        const double defect = oriented_defect(bm.dist, x, y, z, local_gate, q);
        if (defect > local.value || !local.found) consider(local, defect, q);
      }
    }
    per_x[xi] = local;
  });
  Best best;
  for (const auto& candidate : per_x) {
    if (candidate.found) consider(best, candidate.value, candidate.witness);
  }
  if (best.found) {
    auto& w = best.witness;
    w = {bm.vertices[w.x], bm.vertices[w.y], bm.vertices[w.z], bm.vertices[w.p]};
  }
  return best;
}

double base_delta_over_blocks(const WeightedMetricGraph& g, const std::vector<Block>& blocks,
                              std::vector<std::optional<BlockMetric>>& metrics, NodeId p, Quadruple* witness) {
  const auto from_p = single_source_distance(g, p);
  Best best;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& block = blocks[i];
    if (block.vertices.size() < 4) continue;
    // Gate: the unique vertex of the block nearest to p.
    std::size_t gate = 0;
    for (std::size_t k = 1; k < block.vertices.size(); ++k) {
      if (from_p[block.vertices[k]] < from_p[block.vertices[gate]]) gate = k;
    }
    if (!metrics[i]) metrics[i] = block_metric(g, block);
    Best candidate = scan_block_base(*metrics[i], static_cast<NodeId>(gate));
    if (candidate.found) {
      candidate.witness.p = p;
      consider(best, candidate.value, candidate.witness);
    }
  }
  if (witness) *witness = best.found ? best.witness : Quadruple{p, p, p, p};
  return best.value;
}

}  // namespace

std::vector<std::vector<NodeId>> biconnected_blocks(const WeightedMetricGraph& g) {
  std::vector<std::vector<NodeId>> out;
  for (auto& block : compute_blocks(g)) out.push_back(std::move(block.vertices));
  return out;
}

double delta_at_base(const WeightedMetricGraph& g, NodeId p, Quadruple* witness) {
  if (p >= g.size()) throw Error("delta_at_base: base is not a node");
  const auto blocks = compute_blocks(g);
  std::vector<std::optional<BlockMetric>> metrics(blocks.size());
  return base_delta_over_blocks(g, blocks, metrics, p, witness);
}

HyperbolicityReport estimate_delta(const WeightedMetricGraph& g, DeltaMode mode, const DeltaOptions& options) {
  const auto blocks = compute_blocks(g);
  std::vector<std::optional<BlockMetric>> metrics(blocks.size());
  HyperbolicityReport report;
  report.mode = mode;
  for (const auto& block : blocks) report.largest_block = std::max(report.largest_block, block.vertices.size());
  if (g.size() == 1) report.largest_block = 1;

  Quadruple base_witness;
  report.delta_base = base_delta_over_blocks(g, blocks, metrics, g.base(), &base_witness);
  if (mode == DeltaMode::kBasePoint) {
    report.witness = base_witness;
    return report;
  }

  if (report.largest_block > options.global_size_limit && !options.override_size_limit) {
    throw Error("global delta scan over a block of " + std::to_string(report.largest_block) +
                " nodes exceeds the size limit of " + std::to_string(options.global_size_limit) +
                " (override to force)");
  }
  Best best;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].vertices.size() < 4) continue;
    if (!metrics[i]) metrics[i] = block_metric(g, blocks[i]);
    const Best candidate = scan_block_global(*metrics[i]);
    if (candidate.found) consider(best, candidate.value, candidate.witness);
  }
  report.delta_global = best.value;
  report.witness = best.found ? best.witness : Quadruple{g.base(), g.base(), g.base(), g.base()};
  // Rounding in the block-local tables can leave delta_base a hair above the
  // global scan when both are attained by the same quadruple.
  if (report.delta_base > *report.delta_global) {
    report.delta_global = report.delta_base;
    report.witness = base_witness;
  }
  return report;
}

}  // namespace uniformize
