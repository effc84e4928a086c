#include "uniformize/distance.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "uniformize/error.hpp"
#include "uniformize/parallel.hpp"

namespace uniformize {

double DistanceTable::max() const {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

std::vector<double> single_source_distance(const WeightedMetricGraph& g, NodeId source,
                                           std::span<const double> weights) {
  if (!weights.empty() && weights.size() != g.edges().size()) {
    throw Error("weight vector does not match the edge count");
  }
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.size(), inf);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;
    for (const auto& nb : g.neighbors(v)) {
      const double w = weights.empty() ? nb.length : weights[nb.edge];
      const double candidate = d + w;
      if (candidate < dist[nb.node]) {
        dist[nb.node] = candidate;
        queue.emplace(candidate, nb.node);
      }
    }
  }
  return dist;
}

DistanceTable all_pairs_distance(const WeightedMetricGraph& g, std::span<const double> weights) {
  const std::size_t n = g.size();
  std::vector<double> values(n * n);
  parallel_for(n, [&](std::size_t s) {
    auto row = single_source_distance(g, static_cast<NodeId>(s), weights);
    std::copy(row.begin(), row.end(), values.begin() + static_cast<std::ptrdiff_t>(s * n));
  });
  for (std::size_t i = 0; i < n; ++i) {
    values[i * n + i] = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) values[j * n + i] = values[i * n + j];
  }
  return DistanceTable(n, std::move(values));
}

}  // namespace uniformize
