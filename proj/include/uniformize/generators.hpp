#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "uniformize/graph.hpp"

namespace uniformize {

/// Rooted tree: the root has `branching` children, every internal node has
/// `branching` children, leaves sit at depth `radius`.
struct RegularTree {
  int branching = 2;
  int radius = 3;
  bool operator==(const RegularTree&) const = default;
};

/// Ball of radius `rings` around a vertex of the {p,q} tiling (p-gons, q at
/// each vertex), built combinatorially ring by ring.
struct HyperbolicTiling {
  int p = 7;
  int q = 3;
  int rings = 3;
  bool operator==(const HyperbolicTiling&) const = default;
};

struct EuclideanGrid {
  int n = 6;
  bool operator==(const EuclideanGrid&) const = default;
};

struct RandomGnp {
  int n = 30;
  double prob = 0.1;
  std::uint64_t seed = 1;
  bool operator==(const RandomGnp&) const = default;
};

struct GeneratorSpec {
  std::variant<RegularTree, HyperbolicTiling, EuclideanGrid, RandomGnp> kind = RegularTree{};
  double edge_length = 1.0;
  /// Every edge is split into this many equal sub-edges.
  int subdivision = 1;
  bool operator==(const GeneratorSpec&) const = default;
};

std::string generator_name(const GeneratorSpec& spec);

/// Builds the graph. Deterministic for a fixed spec. Frontier: leaves for
/// trees, the sphere of radius `rings` for tilings, the outer boundary for
/// grids, empty for random graphs. Subdivision keeps original node ids and
/// appends the interior nodes after them.
WeightedMetricGraph generate(const GeneratorSpec& spec);

}  // namespace uniformize
