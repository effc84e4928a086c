#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "uniformize/arc.hpp"
#include "uniformize/check_record.hpp"
#include "uniformize/deformation.hpp"

namespace uniformize {

/// Arcs o -> u_1, o -> u_2, ... of strictly increasing length. mu bounds how
/// far the length maps g_ij : arc_i -> arc_j (same arclength) move points.
struct Road {
  std::vector<ArcPath> arcs;
  double mu = 0.0;
  double h = 0.0;
  std::vector<NodeId> mu_witness;
};

/// u_1, ..., u_stages are evenly spaced vertices on the shortest arc from o
/// to `direction` (the last one is `direction` itself), arc_i is the
/// shortest arc o -> u_i, h = 0. The direction must be a frontier node other
/// than o, and the arc must have at least `stages` edges.
Road build_road(const WeightedMetricGraph& g, const DistanceTable& dist, NodeId origin, NodeId direction,
                std::size_t stages);

/// Road from arbitrary h-short arcs sharing their first node; mu is measured
/// by matching equal arclength parameters (nearest vertex on the outer arc).
Road make_road(const DistanceTable& dist, std::vector<ArcPath> arcs, double h);

/// mu <= 4 delta + 2h.
CheckRecord check_road(const Road& road, double delta);

/// arc_n, then a shortest connector beta: u_n -> g_nm(u_n), then arc_m from
/// g_nm(u_n) on. n = m gives arc_n. Throws if n > m, an index is out of
/// range, or l(beta) > mu + h.
ArcPath concatenate_road_arcs(const WeightedMetricGraph& g, const DistanceTable& dist, const Road& road,
                              std::size_t n, std::size_t m);

struct RoughQuasiGeodesic {
  /// max over vertex pairs of max(0, |s - t| - d(path(s), path(t))).
  double k_emp = 0.0;
  /// max over vertex pairs of d(path(s), path(t)) - |s - t|; never positive
  /// for an arclength parametrization beyond rounding.
  double max_upper_excess = 0.0;
  std::vector<NodeId> witness;
};

RoughQuasiGeodesic verify_rough_quasi_geodesic(const DistanceTable& dist, const ArcPath& path);

/// K_emp of concatenate_road_arcs(n, m) against 3 mu + 3 h.
CheckRecord check_road_concatenation(const WeightedMetricGraph& g, const DistanceTable& dist, const Road& road,
                                     std::size_t n, std::size_t m);

struct Lemma33Row {
  NodeId x = 0;
  NodeId y = 0;
  double ratio = 0.0;
  bool near_branch = false;  // eps d(x, y) <= 1/2
};

struct Lemma33Report {
  std::vector<Lemma33Row> rows;
  double c_emp = 0.0;
  CheckRecord record;
};

/// r(x, y) = [e^{-eps (x|y)_p} min(1/2, eps d(x, y)) / eps] / d_eps(x, y) and
/// C_emp = max of max(r, 1/r). SKIPPED (values still filled in) when
/// eps * delta >= 1/5. Throws on d_eps(x, y) = 0 with x != y.
Lemma33Report check_lemma_3_3(const DeformedSpace& ds, std::span<const NodePair> pairs, double delta);

/// Frontier nodes standing in for boundary points, with
/// tau(x, y) = exp(-eps (x|y)_o) and theta its chain-infimum closure.
struct BoundaryProxySet {
  NodeId origin = 0;
  double epsilon = 0.0;
  std::vector<NodeId> proxies;
  std::vector<double> tau;    // proxies.size()^2, row major
  std::vector<double> theta;  // same layout

  std::size_t size() const { return proxies.size(); }
  double tau_at(std::size_t i, std::size_t j) const { return tau[i * proxies.size() + j]; }
  double theta_at(std::size_t i, std::size_t j) const { return theta[i * proxies.size() + j]; }
};

/// Throws when the frontier is empty or eps * delta >= 1/5. With a nonzero
/// `limit`, at most that many evenly spaced frontier nodes are kept.
BoundaryProxySet build_boundary_proxies(const DeformedSpace& ds, NodeId origin, double delta,
                                        std::size_t limit = 0);

/// tau/2 <= theta <= tau on distinct proxies, and the triangle inequality for theta.
CheckRecord check_metametric_sandwich(const BoundaryProxySet& proxies);

/// M_emp = max over distinct proxies of max(theta / d_eps, d_eps / theta).
CheckRecord check_boundary_quasi_isometry(const DeformedSpace& ds, const BoundaryProxySet& proxies);

/// Compares two rays u, v (vertex sequences with increasing distance from
/// the origin o). Checks that (u_i|u_{i+1})_o increases along each ray and
/// that d_eps(u_n, v_n) <= e^{-eps (u_n|v_n)_o} (2C/eps) min(1/2, eps d(u_n, v_n))
/// with C the constant measured by check_lemma_3_3. Reports whether the
/// products grow at least at half the radial rate over the second half
/// ("equivalent"), whether the gaps d_eps(u_n, v_n) are nonincreasing,
/// the smallest gap over the second half and last gap / largest gap.
CheckRecord check_gromov_to_cauchy(const DeformedSpace& ds, NodeId origin, std::span<const NodeId> u,
                                   std::span<const NodeId> v, double lemma_c);

}  // namespace uniformize
