#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "uniformize/check_record.hpp"
#include "uniformize/deformation.hpp"

namespace uniformize {

struct UniformityOptions {
  /// Shortness slack of the measured arcs; also enters the double-cone bound.
  double h = 1.0 / 14.0;
  /// h-short arcs examined per pair (only those with l <= 2 d); 1 means the
  /// shortest arc alone. The worst arc is reported.
  std::size_t arc_limit = 1;
  /// delta of the original space, for the bound exp(delta eps + 9 h eps + 1).
  double delta = 0.0;
  /// Report only (controls without a hyperbolicity assumption).
  bool informational = false;
};

struct UniformityRow {
  NodeId x = 0;
  NodeId y = 0;
  std::vector<NodeId> arc;
  double quasiconvex = 0.0;  // l_eps(arc) / d_eps(x, y)
  double cone_near = 0.0;    // worst z on arc[x, y_arc]
  double cone_far = 0.0;     // worst z past y_arc
  NodeId cone_witness = 0;
  bool degenerate = false;   // x == y
};

struct UniformityReport {
  std::vector<UniformityRow> rows;
  double a_quasiconvex = 0.0;
  double a_cone = 0.0;
  double a_cone_near = 0.0;
  double a_cone_far = 0.0;
  double a = 0.0;
  double bound = 0.0;
  std::size_t degenerate = 0;
  CheckRecord record;
};

/// Measures both uniformity conditions along original-metric arcs:
/// l_eps(arc) / d_eps(x, y) and, for z on the arc,
/// min(l_eps(arc[x,z]), l_eps(arc[z,y])) / dist_eps(z, boundary), with the
/// frontier lower bound standing in for the boundary distance (so the ratio
/// can only be overestimated). The cone bound is asserted only when
/// eps * delta < 1/5; otherwise the record is SKIPPED.
UniformityReport verify_uniform(const DeformedSpace& ds, std::span<const NodePair> pairs,
                                const UniformityOptions& options);

struct GehringHaymanRow {
  NodeId x = 0;
  NodeId y = 0;
  double ratio = 0.0;  // l_eps(arc) / d_eps(x, y)
};

struct GehringHaymanReport {
  std::vector<GehringHaymanRow> rows;
  double k_emp = 0.0;
  CheckRecord record;
};

/// K_emp = max over pairs of l_eps(alpha) / d_eps(x, y) for h-short arcs
/// alpha with l(alpha) <= 2 d(x, y). Rejects h >= 1/13.
GehringHaymanReport verify_gehring_hayman(const DeformedSpace& ds, std::span<const NodePair> pairs, double h,
                                          std::size_t arc_limit = 1);

/// (max - min) / min over a nonempty list of positive values.
double relative_spread(std::span<const double> values);

}  // namespace uniformize
