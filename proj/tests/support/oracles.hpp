#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the graph container.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "uniformize/graph.hpp"

namespace oracle {

using uniformize::NodeId;
using uniformize::WeightedMetricGraph;
using Matrix = std::vector<std::vector<double>>;

inline Matrix floyd_warshall(const WeightedMetricGraph& g, const std::vector<double>& weights = {}) {
  const std::size_t n = g.size();
  const double inf = std::numeric_limits<double>::infinity();
  Matrix d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double w = weights.empty() ? edges[e].length : weights[e];
    d[edges[e].u][edges[e].v] = std::min(d[edges[e].u][edges[e].v], w);
    d[edges[e].v][edges[e].u] = std::min(d[edges[e].v][edges[e].u], w);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

struct SimplePath {
  std::vector<NodeId> nodes;
  double length = 0.0;
};

// Every simple path x -> y by depth-first search.
inline std::vector<SimplePath> simple_paths(const WeightedMetricGraph& g, NodeId x, NodeId y) {
  std::vector<SimplePath> out;
  std::vector<bool> on_path(g.size(), false);
  std::vector<NodeId> path{x};
  on_path[x] = true;
  std::function<void(NodeId, double)> walk = [&](NodeId v, double len) {
    if (v == y) {
      out.push_back({path, len});
      return;
    }
    for (const auto& nb : g.neighbors(v)) {
      if (on_path[nb.node]) continue;
      on_path[nb.node] = true;
      path.push_back(nb.node);
      walk(nb.node, len + nb.length);
      path.pop_back();
      on_path[nb.node] = false;
    }
  };
  walk(x, 0.0);
  std::sort(out.begin(), out.end(), [](const SimplePath& a, const SimplePath& b) {
    return a.length != b.length ? a.length < b.length : a.nodes < b.nodes;
  });
  return out;
}

inline double gromov(const Matrix& d, std::size_t x, std::size_t y, std::size_t p) {
  return 0.5 * (d[x][p] + d[y][p] - d[x][y]);
}

// max over x, y, z of min((x|y)_p, (y|z)_p) - (x|z)_p, clamped at 0.
inline double delta_at(const Matrix& d, std::size_t p) {
  const std::size_t n = d.size();
  double best = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        best = std::max(best, std::min(gromov(d, x, y, p), gromov(d, y, z, p)) - gromov(d, x, z, p));
  return best;
}

inline double delta_global(const Matrix& d) {
  double best = 0.0;
  for (std::size_t p = 0; p < d.size(); ++p) best = std::max(best, delta_at(d, p));
  return best;
}

// Integral of exp(-eps * s) for s from a to a + len.
inline double exp_integral(double eps, double a, double len) {
  return (std::exp(-eps * a) - std::exp(-eps * (a + len))) / eps;
}

// Composite Simpson rule for the density along an edge whose endpoints sit
// at distances du, dv from the base point.
inline double simpson_edge(double eps, double len, double du, double dv, int panels = 20000) {
  auto f = [&](double t) { return std::exp(-eps * std::min(du + t, dv + len - t)); };
  const double step = len / panels;
  double sum = f(0.0) + f(len);
  for (int i = 1; i < panels; ++i) sum += f(i * step) * (i % 2 ? 4.0 : 2.0);
  return sum * step / 3.0;
}

}  // namespace oracle
