#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "uniformize/arc.hpp"
#include "uniformize/deformation.hpp"
#include "uniformize/error.hpp"
#include "uniformize/generators.hpp"
#include "uniformize/hyperbolicity.hpp"
#include "uniformize/sampling.hpp"
#include "uniformize/uniformity.hpp"

using namespace uniformize;

namespace {

DeformationParams params(double eps, Quadrature q = Quadrature::kExactTree) {
  return {.epsilon = eps, .h = 1.0 / 14.0, .quadrature = q};
}

std::vector<NodePair> inner_pairs(const DeformedSpace& ds) {
  PairSamplingOptions options;
  options.inner_only = true;
  options.full_limit = 100000;
  return sample_pairs(ds.graph(), ds.base_distance(), options);
}

}  // namespace

TEST(Sampling, AllPairsBelowLimit) {
  const auto g = generate({RegularTree{2, 3}});
  const auto ds = deform(g, params(0.5));
  const auto pairs = sample_pairs(g, ds.base_distance(), {});
  EXPECT_EQ(pairs.size(), 15u * 14u / 2u);
  for (const auto& [x, y] : pairs) EXPECT_LT(x, y);
}

TEST(Sampling, SeededSampleIncludesBaseFrontierPairs) {
  const auto g = generate({RegularTree{2, 8}});
  const auto ds = deform(g, params(0.5));
  PairSamplingOptions options;
  options.sample_size = 300;
  const auto a = sample_pairs(g, ds.base_distance(), options);
  const auto b = sample_pairs(g, ds.base_distance(), options);
  EXPECT_EQ(a, b);
  EXPECT_GE(a.size(), 300u);
  EXPECT_LE(a.size(), 300u + g.frontier().size());
  const std::set<NodePair> set(a.begin(), a.end());
  EXPECT_EQ(set.size(), a.size());
  for (NodeId f : g.frontier()) EXPECT_TRUE(set.count({g.base(), f}));
  options.seed = 2;
  EXPECT_NE(sample_pairs(g, ds.base_distance(), options), a);
}

TEST(Sampling, InnerNodesWithinHalfRadius) {
  const auto g = generate({RegularTree{2, 8}});
  const auto ds = deform(g, params(0.5));
  const auto inner = inner_nodes(g, ds.base_distance());
  EXPECT_EQ(inner.size(), 31u);
  for (NodeId x : inner) EXPECT_LE(ds.base_distance()(g.base(), x), 4.0);
}

TEST(Uniformity, DegeneratePairRecorded) {
  const auto ds = deform(generate({RegularTree{2, 4}}), params(0.5));
  const std::vector<NodePair> pairs{{3, 3}, {1, 2}};
  const auto report = verify_uniform(ds, pairs, {});
  EXPECT_EQ(report.degenerate, 1u);
  EXPECT_TRUE(report.rows[0].degenerate);
  EXPECT_FALSE(report.rows[1].degenerate);
}

TEST(Uniformity, BinaryTreeInnerPairs) {
  const auto ds = deform(generate({RegularTree{2, 8}}), params(0.5));
  const auto pairs = inner_pairs(ds);
  const auto report = verify_uniform(ds, pairs, {.h = 1.0 / 14.0});
  EXPECT_EQ(report.record.status, CheckStatus::kPass);
  EXPECT_NEAR(report.bound, std::exp(9.0 / 14.0 * 0.5 + 1.0), 1e-12);
  EXPECT_NEAR(report.bound, std::exp(1.3214285714), 1e-9);
  EXPECT_LE(report.a_cone, report.bound);
  EXPECT_EQ(report.a_quasiconvex, 1.0);
  const auto strict = verify_uniform(ds, pairs, {.h = 0.0});
  EXPECT_LE(strict.a_cone, std::exp(1.0));
  EXPECT_EQ(strict.record.status, CheckStatus::kPass);
}

TEST(Uniformity, GridControlIsInformational) {
  const auto ds = deform(generate({EuclideanGrid{8}}), params(0.5, Quadrature::kTrapezoid));
  const auto pairs = sample_pairs(ds.graph(), ds.base_distance(), {});
  const auto report = verify_uniform(ds, pairs, {.informational = true});
  EXPECT_EQ(report.record.status, CheckStatus::kInfo);
  EXPECT_TRUE(report.record.passed());
  EXPECT_GE(report.a_quasiconvex, 1.0 - 1e-9);
}

TEST(Uniformity, SkippedWhenHypothesisFails) {
  const auto ds = deform(generate({HyperbolicTiling{7, 3, 3}}), params(0.5));
  const auto report = verify_uniform(ds, inner_pairs(ds), {.delta = 1.0});
  EXPECT_EQ(report.record.status, CheckStatus::kSkipped);
}

TEST(Uniformity, Errors) {
  const auto tree = deform(generate({RegularTree{2, 3}}), params(0.5));
  const auto gnp = deform(generate({RandomGnp{12, 0.3, 1}}), params(0.5));
  const std::vector<NodePair> pairs{{0, 1}};
  EXPECT_THROW(verify_uniform(gnp, pairs, {}), Error);
  EXPECT_THROW(verify_uniform(tree, std::vector<NodePair>{}, {}), Error);
  EXPECT_THROW(verify_uniform(tree, pairs, {.h = -0.5}), Error);
}

TEST(Uniformity, RatiosAreReproducibleAndQuasiconvexAtLeastOne) {
  const auto g = generate({HyperbolicTiling{7, 3, 4}});
  const double delta = *estimate_delta(g, DeltaMode::kGlobal).delta_global;
  const auto ds = deform(g, params(0.05, Quadrature::kTrapezoid));
  const auto report = verify_uniform(ds, inner_pairs(ds), {.arc_limit = 3, .delta = delta});
  EXPECT_EQ(report.record.status, CheckStatus::kPass);
  for (const auto& row : report.rows) {
    EXPECT_GE(row.quasiconvex, 1.0 - 1e-9);
    EXPECT_GE(row.cone_near, 0.0);
    EXPECT_GE(row.cone_far, 0.0);
    const auto arc = ArcPath::from_nodes(ds.graph(), row.arc);
    EXPECT_EQ(arc.front(), row.x);
    EXPECT_EQ(arc.back(), row.y);
    EXPECT_LE(arc.length(), 2.0 * ds.base_distance()(row.x, row.y) + 1e-9);
    EXPECT_DOUBLE_EQ(row.quasiconvex, ds.deformed_length(arc) / ds.distance(row.x, row.y));
  }
}

TEST(Uniformity, NonincreasingAsEpsilonShrinks) {
  const auto g = generate({RegularTree{2, 8}});
  double previous = std::numeric_limits<double>::infinity();
  for (double eps : {1.0, 0.5, 0.3, 0.1}) {
    const auto ds = deform(g, params(eps));
    const auto report = verify_uniform(ds, inner_pairs(ds), {});
    EXPECT_LE(report.a, previous + 1e-12) << eps;
    previous = report.a;
  }
}

TEST(GehringHayman, TreeIsExactlyOne) {
  const auto ds = deform(generate({RegularTree{3, 4}}), params(0.5));
  const auto pairs = sample_pairs(ds.graph(), ds.base_distance(), {.full_limit = 1000});
  const auto report = verify_gehring_hayman(ds, pairs, 1.0 / 14.0);
  EXPECT_EQ(report.k_emp, 1.0);
  EXPECT_EQ(report.record.status, CheckStatus::kPass);
}

TEST(GehringHayman, CycleWithHeavyCornerExceedsOne) {
  // The lexicographic arc 1 -> 0 -> 3 runs through p where the density is
  // largest; the deformed geodesic goes round through the far corner 2.
  const WeightedMetricGraph g(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}}, 0, {2});
  const auto ds = deform(g, params(1.0, Quadrature::kTrapezoid));
  const std::vector<NodePair> pairs{{1, 3}};
  const auto report = verify_gehring_hayman(ds, pairs, 0.0);
  const double through_p = 2.0 * (1.0 + std::exp(-1.0)) / 2.0;
  const double round = 2.0 * (std::exp(-1.0) + std::exp(-2.0)) / 2.0;
  EXPECT_DOUBLE_EQ(report.k_emp, through_p / round);
  EXPECT_GT(report.k_emp, 1.0);
}

TEST(GehringHayman, RejectsLargeH) {
  const auto ds = deform(generate({RegularTree{2, 3}}), params(0.5));
  const std::vector<NodePair> pairs{{0, 1}};
  EXPECT_THROW(verify_gehring_hayman(ds, pairs, 1.0 / 13.0), Error);
  EXPECT_THROW(verify_gehring_hayman(ds, pairs, 0.5), Error);
  EXPECT_NO_THROW(verify_gehring_hayman(ds, pairs, 1.0 / 14.0));
}

TEST(GehringHayman, TilingFiniteAndAtLeastOne) {
  for (int rings : {3, 4}) {
    const auto ds = deform(generate({HyperbolicTiling{7, 3, rings}}), params(0.3));
    const auto pairs = sample_pairs(ds.graph(), ds.base_distance(), {});
    const auto report = verify_gehring_hayman(ds, pairs, 1.0 / 14.0, 4);
    EXPECT_EQ(report.record.status, CheckStatus::kPass);
    EXPECT_TRUE(std::isfinite(report.k_emp));
    EXPECT_GE(report.k_emp, 1.0);
  }
}

TEST(Spread, Definition) {
  const std::vector<double> values{2.0, 2.5, 2.2};
  EXPECT_DOUBLE_EQ(relative_spread(values), 0.25);
  EXPECT_THROW(relative_spread(std::vector<double>{}), Error);
}
