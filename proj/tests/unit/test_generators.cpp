#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "uniformize/arc.hpp"
#include "uniformize/distance.hpp"
#include "uniformize/error.hpp"
#include "uniformize/generators.hpp"
#include "uniformize/gromov.hpp"
#include "uniformize/hyperbolicity.hpp"

using namespace uniformize;

namespace {

std::vector<GeneratorSpec> catalog() {
  return {
      {RegularTree{2, 3}},
      {RegularTree{3, 3}, 1.5},
      {HyperbolicTiling{7, 3, 3}},
      {HyperbolicTiling{4, 5, 2}},
      {EuclideanGrid{5}},
      {RandomGnp{20, 0.2, 3}},
  };
}

std::vector<std::size_t> sphere_sizes(const WeightedMetricGraph& g) {
  const auto d = all_pairs_distance(g);
  std::map<double, std::size_t> counts;
  for (NodeId x = 0; x < g.size(); ++x) ++counts[d(g.base(), x)];
  std::vector<std::size_t> out;
  for (const auto& [r, c] : counts) out.push_back(c);
  return out;
}

}  // namespace

TEST(Tree, BinaryRadiusThree) {
  const auto g = generate({RegularTree{2, 3}});
  EXPECT_EQ(g.size(), 15u);
  EXPECT_EQ(g.edges().size(), 14u);
  EXPECT_EQ(g.frontier().size(), 8u);
  EXPECT_EQ(g.base(), 0u);
  const auto d = all_pairs_distance(g);
  for (NodeId f : g.frontier()) EXPECT_EQ(d(0, f), 3.0);
  EXPECT_EQ(g.metadata().generator, "regular-tree");
}

TEST(Tree, RejectsBadParameters) {
  EXPECT_THROW(generate({RegularTree{1, 3}}), Error);
  EXPECT_THROW(generate({RegularTree{2, 0}}), Error);
  EXPECT_THROW(generate({RegularTree{2, 3}, 0.0}), Error);
  EXPECT_THROW(generate({RegularTree{2, 3}, 1.0, 0}), Error);
}

TEST(Tree, AlwaysZeroHyperbolic) {
  for (int b : {2, 3, 4}) {
    for (int r : {1, 2, 3}) {
      for (int k : {1, 2}) {
        const auto g = generate({RegularTree{b, r}, 1.0, k});
        EXPECT_EQ(*estimate_delta(g, DeltaMode::kGlobal, {2000, false}).delta_global, 0.0);
      }
    }
  }
}

TEST(Tiling, RejectsNonHyperbolic) {
  for (auto [p, q] : {std::pair{4, 4}, {3, 6}, {6, 3}, {3, 3}, {5, 3}}) {
    try {
      generate({HyperbolicTiling{p, q, 2}});
      FAIL() << p << "," << q;
    } catch (const Error& e) {
      EXPECT_NE(std::string(e.what()).find("not hyperbolic"), std::string::npos);
    }
  }
}

TEST(Tiling, SevenThreeSphereSizes) {
  const auto g = generate({HyperbolicTiling{7, 3, 4}});
  const auto sizes = sphere_sizes(g);
  const std::vector<std::size_t> expected{1, 3, 6, 12, 18};
  ASSERT_GE(sizes.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(sizes[i], expected[i]) << "radius " << i;
}

TEST(Tiling, ThreeSevenSphereSizes) {
  const auto g = generate({HyperbolicTiling{3, 7, 3}});
  const auto sizes = sphere_sizes(g);
  const std::vector<std::size_t> expected{1, 7, 21, 56};
  ASSERT_EQ(sizes.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(sizes[i], expected[i]);
}

TEST(Tiling, InteriorDegreeAndFiniteDelta) {
  for (auto [p, q] : {std::pair{7, 3}, {3, 7}, {4, 5}, {5, 4}}) {
    const auto g = generate({HyperbolicTiling{p, q, 3}});
    const auto d = all_pairs_distance(g);
    const double r = d(g.base(), g.frontier().front());
    for (NodeId x = 0; x < g.size(); ++x) {
      EXPECT_LE(g.neighbors(x).size(), static_cast<std::size_t>(q));
      if (d(g.base(), x) + 1 < r) {
        EXPECT_EQ(g.neighbors(x).size(), static_cast<std::size_t>(q));
      }
    }
    for (NodeId f : g.frontier()) EXPECT_EQ(d(g.base(), f), r);
  }
  const auto report = estimate_delta(generate({HyperbolicTiling{7, 3, 3}}), DeltaMode::kGlobal);
  EXPECT_GT(*report.delta_global, 0.0);
  EXPECT_TRUE(std::isfinite(*report.delta_global));
}

TEST(Grid, FrontierIsOuterBoundary) {
  const auto g = generate({EuclideanGrid{6}});
  EXPECT_EQ(g.size(), 36u);
  EXPECT_EQ(g.edges().size(), 60u);
  EXPECT_EQ(g.frontier().size(), 20u);
  EXPECT_EQ(g.base(), 21u);
}

TEST(Gnp, ConnectedDeterministicNoFrontier) {
  const auto a = generate({RandomGnp{40, 0.05, 11}});
  const auto b = generate({RandomGnp{40, 0.05, 11}});
  const auto c = generate({RandomGnp{40, 0.05, 12}});
  EXPECT_TRUE(a.frontier().empty());
  ASSERT_EQ(a.edges().size(), b.edges().size());
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    EXPECT_EQ(a.edges()[i].u, b.edges()[i].u);
    EXPECT_EQ(a.edges()[i].v, b.edges()[i].v);
  }
  bool differs = a.edges().size() != c.edges().size();
  for (std::size_t i = 0; !differs && i < a.edges().size(); ++i) differs = a.edges()[i].v != c.edges()[i].v;
  EXPECT_TRUE(differs);
  // prob 0 still yields a connected graph
  EXPECT_EQ(generate({RandomGnp{10, 0.0, 1}}).edges().size(), 9u);
}

TEST(Subdivision, OriginalDistancesAndQuantitiesUnchanged) {
  for (const auto& base_spec : catalog()) {
    const auto g1 = generate(base_spec);
    const auto d1 = all_pairs_distance(g1);
    const auto delta1 = estimate_delta(g1, DeltaMode::kBasePoint).delta_base;
    for (int k : {2, 4}) {
      auto spec = base_spec;
      spec.subdivision = k;
      const auto gk = generate(spec);
      EXPECT_EQ(gk.size(), g1.size() + g1.edges().size() * (k - 1));
      EXPECT_EQ(gk.original_node_count(), g1.size());
      EXPECT_EQ(gk.base(), g1.base());
      EXPECT_TRUE(std::equal(g1.frontier().begin(), g1.frontier().end(), gk.frontier().begin(), gk.frontier().end()));
      const auto dk = all_pairs_distance(gk);
      for (NodeId x = 0; x < g1.size(); ++x) {
        for (NodeId y = 0; y < g1.size(); ++y) {
          ASSERT_EQ(dk(x, y), d1(x, y));
          for (NodeId p : {g1.base(), NodeId{0}}) ASSERT_EQ(gromov_product(dk, x, y, p), gromov_product(d1, x, y, p));
        }
      }
      // the base-point defect restricted to original nodes is the same
      double delta_orig = 0.0;
      const NodeId p = g1.base();
      for (NodeId x = 0; x < g1.size(); ++x)
        for (NodeId y = 0; y < g1.size(); ++y)
          for (NodeId z = 0; z < g1.size(); ++z)
            delta_orig = std::max(delta_orig, four_point_defect(dk, x, y, z, p));
      EXPECT_EQ(delta_orig, delta1);
    }
  }
}

TEST(Generate, DeterministicForFixedSpec) {
  for (const auto& spec : catalog()) {
    const auto a = generate(spec);
    const auto b = generate(spec);
    ASSERT_EQ(a.size(), b.size());
    ASSERT_EQ(a.edges().size(), b.edges().size());
    for (std::size_t i = 0; i < a.edges().size(); ++i) {
      EXPECT_EQ(a.edges()[i].u, b.edges()[i].u);
      EXPECT_EQ(a.edges()[i].v, b.edges()[i].v);
      EXPECT_EQ(a.edges()[i].length, b.edges()[i].length);
    }
    EXPECT_EQ(a.metadata(), b.metadata());
  }
}
