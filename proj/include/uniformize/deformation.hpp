#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uniformize/arc.hpp"
#include "uniformize/check_record.hpp"
#include "uniformize/distance.hpp"
#include "uniformize/graph.hpp"

namespace uniformize {

/// How the density is integrated along an edge.
enum class Quadrature {
  /// l * (rho(u) + rho(v)) / 2.
  kTrapezoid,
  /// Closed-form integral of exp(-eps * dist(p, .)) along the edge, where the
  /// distance to p at an interior point is min(d(u,p) + s, d(v,p) + l - s).
  /// On trees this is the affine case; it is exact on every metric graph.
  kExactTree,
};

const char* to_string(Quadrature q);
std::optional<Quadrature> parse_quadrature(const std::string& text);

/// Where eps sits relative to the admissible range min{1, 1/(5 delta)}.
struct EpsilonPolicy {
  double delta = 0.0;
  double epsilon_bound = 1.0;
  bool satisfied = true;  // eps * delta < 1/5
};

EpsilonPolicy epsilon_policy(double epsilon, double delta);

struct DeformationParams {
  double epsilon = 0.5;
  double h = 1.0 / 14.0;
  Quadrature quadrature = Quadrature::kExactTree;
  std::optional<EpsilonPolicy> policy;  // filled once a delta has been measured
};

/// Integral of the density over one edge of length `length` whose endpoints
/// lie at distances `du`, `dv` from the base point.
double edge_density_integral(Quadrature quadrature, double epsilon, double length, double du, double dv);

/// The conformally deformed space: the base graph, rho(x) = exp(-eps d(x,p)),
/// deformed edge lengths and the deformed metric on vertices.
class DeformedSpace {
 public:
  DeformedSpace(std::shared_ptr<const WeightedMetricGraph> graph, std::shared_ptr<const DistanceTable> base_distance,
                DeformationParams params);

  const WeightedMetricGraph& graph() const { return *graph_; }
  std::shared_ptr<const WeightedMetricGraph> graph_ptr() const { return graph_; }
  const DistanceTable& base_distance() const { return *base_distance_; }
  std::shared_ptr<const DistanceTable> base_distance_ptr() const { return base_distance_; }
  const DeformationParams& params() const { return params_; }
  double epsilon() const { return params_.epsilon; }

  double density(NodeId x) const { return density_[x]; }
  std::span<const double> densities() const { return density_; }
  std::span<const double> deformed_edge_lengths() const { return deformed_lengths_; }
  const DistanceTable& deformed_distance() const { return deformed_; }
  double distance(NodeId x, NodeId y) const { return deformed_(x, y); }

  /// min over frontier nodes f of d_eps(x, f); +inf without a frontier.
  double frontier_distance(NodeId x) const { return frontier_distance_[x]; }

  /// l_eps of a walk, accumulated from its lower-id endpoint so that it
  /// matches how the distance table accumulates geodesics.
  double deformed_length(const ArcPath& arc) const;
  /// Prefix deformed lengths along the walk (from its first node).
  std::vector<double> deformed_prefix(const ArcPath& arc) const;

 private:
  std::shared_ptr<const WeightedMetricGraph> graph_;
  std::shared_ptr<const DistanceTable> base_distance_;
  DeformationParams params_;
  std::vector<double> density_;
  std::vector<double> deformed_lengths_;
  DistanceTable deformed_;
  std::vector<double> frontier_distance_;
};

DeformedSpace deform(const WeightedMetricGraph& g, const DeformationParams& params);
DeformedSpace deform(std::shared_ptr<const WeightedMetricGraph> g, std::shared_ptr<const DistanceTable> distances,
                     const DeformationParams& params);

/// exp(-eps d(x,y)) <= rho(x)/rho(y) <= exp(eps d(x,y)) on all pairs; slack
/// is relative to the bound.
CheckRecord check_harnack(const DeformedSpace& ds);

/// diam_eps <= 2 e^eps / eps.
CheckRecord check_diameter(const DeformedSpace& ds);

/// On the closed ball B(w, 1):
/// e^{-5 eps} rho(w) d(x,y) <= d_eps(x,y) <= 2 e^{5 eps} rho(w) d(x,y).
CheckRecord check_local_bilipschitz(const DeformedSpace& ds, NodeId w);

struct BoundaryDistance {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bracket for d_eps(x, boundary). The frontier minimum is a lower bound
/// (every escaping path crosses the frontier); the tail e^{-eps R}/eps beyond
/// the truncation radius R = min_f d(p, f) gives the upper end.
BoundaryDistance boundary_distance(const DeformedSpace& ds, NodeId x);

/// d_eps(x, boundary) >= rho(x) / (e eps) for inner nodes d(p,x) <= R/2.
/// Skipped when eps * R < 1: the frontier then sits inside the 1/eps scale
/// over which the estimate integrates, so the proxy says nothing about it.
CheckRecord check_boundary_lower_bound(const DeformedSpace& ds);

/// Along a ray u_0 = p, u_1, ... with strictly increasing d(p, .):
/// d_eps(u_n, u_m) <= (1/eps) e^{eps K} e^{-eps t_n} for n <= m, where t_n is
/// the arclength to u_n and K the measured rough quasi-geodesic constant.
CheckRecord check_incompleteness_cauchy(const DeformedSpace& ds, std::span<const NodeId> ray);

/// Ray from the base point to `target` along the shortest arc.
std::vector<NodeId> radial_ray(const WeightedMetricGraph& g, const DistanceTable& dist, NodeId target);

}  // namespace uniformize
