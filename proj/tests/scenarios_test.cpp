// Copyright 2026 The sciclust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sciclust/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "sciclust/clustering.hpp"
#include "test_support.hpp"

namespace sciclust {
namespace {

ScenarioSpec spec_of(ScenarioKind kind) {
  ScenarioSpec s;
  s.kind = kind;
  return s;
}

std::vector<std::size_t> sizes(const ClusterTable& t) {
  std::vector<std::size_t> out;
  for (const auto& rec : t.records) out.push_back(rec.size);
  return out;
}

// Planted groups must coincide with the oracle partition wherever every point
// has a group.
void expect_planted_partition(const Scenario& sc, double r) {
  const auto oracle = testing::union_find_labels(build_adjacency(sc.points, {r}));
  std::vector<std::size_t> planted(sc.groups.begin(), sc.groups.end());
  EXPECT_EQ(testing::canonical(oracle), testing::canonical(planted));
  EXPECT_EQ(cluster_pointset(sc.points, {r}).labels.labels, oracle);
}

TEST(ScenarioKinds, NamesRoundTrip) {
  for (const auto& [kind, name] : kScenarioKindNames) {
    EXPECT_EQ(parse_scenario_kind(name), kind);
    EXPECT_EQ(to_string(kind), name);
  }
  EXPECT_THROW(parse_scenario_kind("spiral"), InputError);
}

TEST(Generate, ChainOfFourteen) {
  ScenarioSpec s = spec_of(ScenarioKind::kChain);
  s.n = 14;
  s.spacing = 0.9;
  const Scenario sc = generate_scenario(s);
  EXPECT_EQ(sc.points.size(), 14u);
  const ClusteringResult r = cluster_pointset(sc.points, {s.radius});
  EXPECT_EQ(sizes(r.table), (std::vector<std::size_t>{14}));
  expect_planted_partition(sc, s.radius);
}

TEST(Generate, RingHasEmptyCenter) {
  ScenarioSpec s = spec_of(ScenarioKind::kRing);
  s.n = 24;
  s.ring_radius = 3.5;
  s.radius = 2.0;
  const PointSet ps = generate(s);
  EXPECT_EQ(ps.size(), 24u);
  double cx = 0, cy = 0;
  for (const Point& p : ps) {
    cx += p.coords[0];
    cy += p.coords[1];
  }
  const Point centroid{0, {cx / 24.0, cy / 24.0}};
  for (const Point& p : ps) EXPECT_GE(euclidean_distance(p, centroid), s.radius);
  EXPECT_EQ(cluster_pointset(ps, {s.radius}).table.cluster_count(), 1u);
}

TEST(Generate, SparseRingFallsApart) {
  ScenarioSpec s = spec_of(ScenarioKind::kRing);
  s.n = 24;
  s.ring_radius = 10.0;  // neighbor chord ~2.6 r
  EXPECT_EQ(cluster_pointset(generate(s), {s.radius}).table.cluster_count(), 24u);
}

TEST(Generate, DenseCoreIsRankOne) {
  ScenarioSpec s = spec_of(ScenarioKind::kDenseCoreWithScatter);
  s.n_core = 40;
  s.n_scatter = 20;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    s.seed = seed;
    const Scenario sc = generate_scenario(s);
    const ClusteringResult r = cluster_pointset(sc.points, {s.radius});
    const Label top = r.table.ranking.front();
    EXPECT_GE(r.table.frequency(top), 40u);
    for (std::size_t i = 0; i < sc.points.size(); ++i) {
      if (sc.groups[i] == 0) {
        EXPECT_EQ(r.labels[i], top) << "seed " << seed << " node " << i;
      }
    }
  }
}

TEST(Generate, DenseCoreNeedsFewerScatterThanCore) {
  ScenarioSpec s = spec_of(ScenarioKind::kDenseCoreWithScatter);
  s.n_core = 10;
  s.n_scatter = 10;
  EXPECT_THROW(generate(s), InputError);
}

TEST(Generate, ShapesFormOneClusterEach) {
  for (ScenarioKind kind : {ScenarioKind::kChain, ScenarioKind::kThickChain, ScenarioKind::kBlob,
                            ScenarioKind::kForkedBranch}) {
    for (std::size_t n : {4u, 13u, 19u, 41u}) {
      ScenarioSpec s = spec_of(kind);
      s.n = n;
      s.radius = 3.0;
      const Scenario sc = generate_scenario(s);
      EXPECT_EQ(sc.points.size(), n);
      EXPECT_EQ(cluster_pointset(sc.points, {s.radius}).table.cluster_count(), 1u)
          << to_string(kind) << " n=" << n;
    }
  }
}

TEST(Generate, ForkedBranchActuallyForks) {
  ScenarioSpec s = spec_of(ScenarioKind::kForkedBranch);
  s.n = 40;
  const PointSet ps = generate(s);
  std::size_t above = 0, below = 0;
  for (const Point& p : ps) {
    if (p.coords[1] > 1.5) ++above;
    if (p.coords[1] < -1.5) ++below;
  }
  EXPECT_GT(above, 0u);
  EXPECT_EQ(above, below);
}

TEST(Generate, MixedShapesSizes) {
  const Scenario sc = generate_scenario(spec_of(ScenarioKind::kMixedShapes));
  const ClusteringResult r = cluster_pointset(sc.points, {1.0});
  EXPECT_EQ(sizes(r.table), (std::vector<std::size_t>{19, 14, 13, 10, 6, 4, 1}));
  expect_planted_partition(sc, 1.0);
}

TEST(Generate, BranchingPathsSizes) {
  const Scenario sc = generate_scenario(spec_of(ScenarioKind::kBranchingPaths));
  const ClusteringResult r = cluster_pointset(sc.points, {1.0});
  EXPECT_EQ(sizes(r.table), (std::vector<std::size_t>{40, 12, 8, 5}));
  expect_planted_partition(sc, 1.0);
}

TEST(Generate, ScalesWithRadius) {
  ScenarioSpec s = spec_of(ScenarioKind::kMixedShapes);
  s.radius = 25.0;
  const ClusteringResult r = cluster_pointset(generate(s), {25.0});
  EXPECT_EQ(r.table.cluster_count(), 7u);
}

TEST(Generate, DeterministicPerSeed) {
  ScenarioSpec s = spec_of(ScenarioKind::kUniformRandom);
  s.n = 100;
  s.seed = 77;
  const PointSet a = generate(s);
  const PointSet b = generate(s);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].coords, b[i].coords);
  s.seed = 78;
  const PointSet c = generate(s);
  EXPECT_EQ(c.size(), a.size());
  EXPECT_NE(c[0].coords, a[0].coords);
}

// mt19937_64's sequence is fixed by the standard (10000th output of the
// default-seeded engine is 9981545732273789042), so generated coordinates are
// portable. Pin the first point of a seeded field to catch accidental changes.
TEST(Generate, PortableRandomSequence) {
  std::mt19937_64 engine;
  engine.discard(9999);
  EXPECT_EQ(engine(), 9981545732273789042ull);

  ScenarioSpec s = spec_of(ScenarioKind::kUniformRandom);
  s.n = 1;
  s.density = kHighDensity;
  s.seed = 5489;
  const PointSet ps = generate(s);
  std::mt19937_64 ref(5489);
  const double side = std::sqrt(std::numbers::pi / kHighDensity);
  const double x = (static_cast<double>(ref() >> 11) * 0x1.0p-53 - 0.5) * side;
  EXPECT_EQ(ps[0].coords[0], x);
}

TEST(Generate, RejectsInvalidParameters) {
  ScenarioSpec s = spec_of(ScenarioKind::kChain);
  s.n = 0;
  EXPECT_THROW(generate(s), InputError);
  s.n = 5;
  s.spacing = -1.0;
  EXPECT_THROW(generate(s), InputError);
  s = spec_of(ScenarioKind::kRing);
  s.n = 2;
  EXPECT_THROW(generate(s), InputError);
  s = spec_of(ScenarioKind::kUniformRandom);
  s.density = 0.0;
  EXPECT_THROW(generate(s), InputError);
  s = spec_of(ScenarioKind::kBlob);
  s.radius = 0.0;
  EXPECT_THROW(generate(s), InputError);
  s = spec_of(ScenarioKind::kForkedBranch);
  s.n = 3;
  EXPECT_THROW(generate(s), InputError);
}

// Soft statistical trend over 30 seeds: medium-density fields form larger
// top clusters than low-density ones.
TEST(GenerateProperty, DensityTrend) {
  const auto mean_top3 = [](double density) {
    double total = 0.0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      ScenarioSpec s = spec_of(ScenarioKind::kUniformRandom);
      s.n = 150;
      s.density = density;
      s.seed = seed;
      const ClusterTable t = cluster_pointset(generate(s), {1.0}).table;
      double top = 0.0;
      const std::size_t k = std::min<std::size_t>(3, t.records.size());
      for (std::size_t i = 0; i < k; ++i) top += static_cast<double>(t.records[i].size);
      total += top / static_cast<double>(k);
    }
    return total / 30.0;
  };
  const double low = mean_top3(kLowDensity);
  const double medium = mean_top3(kMediumDensity);
  EXPECT_GT(medium, low);
}

}  // namespace
}  // namespace sciclust
