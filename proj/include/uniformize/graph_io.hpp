#pragma once

#include <iosfwd>
#include <string>

#include "uniformize/deformation.hpp"
#include "uniformize/graph.hpp"

namespace uniformize {

/// Text edge list:
///
///   nodes N base P
///   frontier i j k ...        (optional)
///   # meta key=value          (metadata, generator name under key "generator")
///   u v length                (one line per edge)
///
/// Other lines starting with '#' are comments. A line reading `density`
/// ends the edge list (deformed-space files continue with `node value`
/// lines). Lengths are written in shortest round-trip form, so
/// write/read is lossless.
void write_graph(std::ostream& out, const WeightedMetricGraph& g);
WeightedMetricGraph read_graph(std::istream& in);
WeightedMetricGraph read_graph_file(const std::string& path);

/// The graph file of ds with deformed edge lengths, epsilon and quadrature
/// as metadata, then a `density` block.
void write_deformed(std::ostream& out, const DeformedSpace& ds);

}  // namespace uniformize
