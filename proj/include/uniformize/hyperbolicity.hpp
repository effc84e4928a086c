#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "uniformize/distance.hpp"
#include "uniformize/graph.hpp"

namespace uniformize {

enum class DeltaMode { kBasePoint, kGlobal };

/// Ordered roles (x, y, z; p) of the Gromov-product condition
/// (x|z)_p >= min{(x|y)_p, (y|z)_p} - delta.
struct Quadruple {
  NodeId x = 0;
  NodeId y = 0;
  NodeId z = 0;
  NodeId p = 0;
  bool operator==(const Quadruple&) const = default;
};

struct HyperbolicityReport {
  DeltaMode mode = DeltaMode::kGlobal;
  double delta_base = 0.0;                  // at the graph's base point
  std::optional<double> delta_global;       // only in global mode
  Quadruple witness;                        // attains the reported delta for the mode
  std::size_t largest_block = 0;            // nodes in the largest biconnected block
};

struct DeltaOptions {
  /// Global mode is O(m^4) in the largest biconnected block size m.
  std::size_t global_size_limit = 400;
  bool override_size_limit = false;
};

/// Defect of the condition at one ordered quadruple, clamped at 0:
/// (d(x,z) + d(y,p) - max{d(x,y) + d(z,p), d(y,z) + d(x,p)}) / 2.
double four_point_defect(const DistanceTable& dist, NodeId x, NodeId y, NodeId z, NodeId p);

/// Vertex sets of the biconnected blocks (bridges give 2-node blocks),
/// each sorted, blocks ordered by their smallest vertex.
std::vector<std::vector<NodeId>> biconnected_blocks(const WeightedMetricGraph& g);

/// Delta with a fixed base point p (max over x, y, z).
double delta_at_base(const WeightedMetricGraph& g, NodeId p, Quadruple* witness = nullptr);

/// Delta estimate. The scans run per biconnected block: blocks are
/// isometrically embedded and a quadruple spanning several blocks never has
/// a larger defect than its projection into one of them.
HyperbolicityReport estimate_delta(const WeightedMetricGraph& g, DeltaMode mode, const DeltaOptions& options = {});

}  // namespace uniformize
