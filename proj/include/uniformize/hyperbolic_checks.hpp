#pragma once

#include <cstddef>

#include "uniformize/arc.hpp"
#include "uniformize/check_record.hpp"
#include "uniformize/distance.hpp"

namespace uniformize {

/// Tripod estimate for h-short arcs a -> b1 and a -> b2: for x1 on the first
/// arc with d(x1, a) <= (b1|b2)_a, the point x2 on the second arc at the same
/// distance from a and the point x2' at the same arclength satisfy
/// d(x1, x2) <= 4 delta + h and d(x1, x2') <= 4 delta + 2h.
///
/// Every pair drawn from h_short_arcs(.., arc_limit) is checked. Points live
/// on vertices, so x2 / x2' are the closest vertex matches; the mismatch is
/// reported and added to the bound as a discretization allowance.
CheckRecord verify_tripod(const WeightedMetricGraph& g, const DistanceTable& dist, double delta, double h, NodeId a,
                          NodeId b1, NodeId b2, std::size_t arc_limit = 4);

/// For an h-short arc x -> y and a point p, with y_gamma placed by
/// l(arc[y_gamma, y]) = (x|p)_y: every z in arc[x, y_gamma] and u in arc[x, z]
/// satisfy d(p,u) - d(p,z) >= d(u,z) - 8 delta - 8h. Throws if the arc is not
/// h-short.
CheckRecord verify_lemma_2_10(const DistanceTable& dist, double delta, double h, const ArcPath& arc, NodeId p);

}  // namespace uniformize
