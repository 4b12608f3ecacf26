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

#pragma once

// Deterministic point layouts with a cluster structure known by
// construction. Every length parameter is a multiple of the clustering
// radius r (`ScenarioSpec::radius`); generated coordinates are absolute.
//
// Expected partitions, assuming clustering at radius r:
//   chain            n points on a line, `spacing` apart. One cluster if spacing < 1.
//   thick-chain      two-row zigzag, neighbors ~0.78*spacing apart. One cluster if spacing < 1.
//   blob             n points packed in a disk of radius 0.45. Always one cluster.
//   ring             n points on a circle of radius `ring_radius`. One cluster if
//                    2*ring_radius*sin(pi/n) < 1; no point is near the center.
//   forked-branch    stem, two diamond-shaped branches that fork and rejoin, tail;
//                    consecutive samples `spacing` apart. One cluster if spacing < 1.
//   dense-core-with-scatter
//                    n_core points uniform in a disk of radius 0.45 (pairwise
//                    connected) plus n_scatter points at ~0.5 points per r-disk.
//                    Requires n_scatter < n_core, so the core's cluster is rank 1.
//   uniform-random   n points uniform in a square sized for `density` expected
//                    points per r-disk. No planted structure.
//   mixed-shapes     seven separated groups of sizes 19 (blob), 14 (chain),
//                    13 (thick chain), 10 (ring), 6 (blob), 4 (chain), 1.
//   branching-paths  four separated groups: a 40-point forked branch and chains
//                    of 12, 8 and 5.
//
// Stochastic kinds draw from std::mt19937_64, whose output sequence is fixed
// by the C++ standard, and map raw 64-bit outputs to doubles with an explicit
// 53-bit conversion instead of the implementation-defined std distributions.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sciclust/error.hpp"
#include "sciclust/geometry.hpp"

namespace sciclust {

enum class ScenarioKind {
  kChain,
  kThickChain,
  kBlob,
  kRing,
  kForkedBranch,
  kDenseCoreWithScatter,
  kUniformRandom,
  kMixedShapes,
  kBranchingPaths,
};

inline constexpr std::array<std::pair<ScenarioKind, std::string_view>, 9> kScenarioKindNames = {{
    {ScenarioKind::kChain, "chain"},
    {ScenarioKind::kThickChain, "thick-chain"},
    {ScenarioKind::kBlob, "blob"},
    {ScenarioKind::kRing, "ring"},
    {ScenarioKind::kForkedBranch, "forked-branch"},
    {ScenarioKind::kDenseCoreWithScatter, "dense-core-with-scatter"},
    {ScenarioKind::kUniformRandom, "uniform-random"},
    {ScenarioKind::kMixedShapes, "mixed-shapes"},
    {ScenarioKind::kBranchingPaths, "branching-paths"},
}};

inline std::string_view to_string(ScenarioKind kind) {
  for (const auto& [k, name] : kScenarioKindNames)
    if (k == kind) return name;
  throw InvariantError("unknown scenario kind");
}

inline ScenarioKind parse_scenario_kind(std::string_view name) {
  for (const auto& [k, n] : kScenarioKindNames)
    if (n == name) return k;
  throw InputError("unknown scenario kind '" + std::string(name) + "'");
}

/// Expected points per r-disk for the three named field densities.
inline constexpr double kLowDensity = 0.5;
inline constexpr double kMediumDensity = 2.0;
inline constexpr double kHighDensity = 8.0;

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::kChain;
  double radius = 1.0;
  std::size_t n = 14;
  double spacing = 0.9;
  double ring_radius = 3.5;
  std::size_t n_core = 40;
  std::size_t n_scatter = 20;
  double density = kMediumDensity;
  std::uint64_t seed = 1;
};

/// Generated points plus the planted group of each point (index-aligned);
/// -1 marks points with no planted group (scatter, uniform fields).
struct Scenario {
  PointSet points;
  std::vector<int> groups;
};

namespace detail {

using Coords = std::vector<std::array<double, 2>>;

class UnitRng {
 public:
  explicit UnitRng(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InputError("scenario: " + what);
}

inline Coords chain(std::size_t n, double spacing) {
  Coords c;
  for (std::size_t i = 0; i < n; ++i) c.push_back({static_cast<double>(i) * spacing, 0.0});
  return c;
}

inline Coords thick_chain(std::size_t n, double spacing) {
  Coords c;
  for (std::size_t i = 0; i < n; ++i)
    c.push_back({static_cast<double>(i) * spacing * 0.5, (i % 2) * spacing * 0.6});
  return c;
}

// Vogel spiral: even packing with every point inside radius 0.45.
inline Coords blob(std::size_t n) {
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  Coords c;
  for (std::size_t k = 0; k < n; ++k) {
    const double rho = 0.45 * std::sqrt((static_cast<double>(k) + 0.5) / static_cast<double>(n));
    const double theta = golden * static_cast<double>(k);
    c.push_back({rho * std::cos(theta), rho * std::sin(theta)});
  }
  return c;
}

inline Coords ring(std::size_t n, double ring_radius) {
  Coords c;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    c.push_back({ring_radius * std::cos(theta), ring_radius * std::sin(theta)});
  }
  return c;
}

// Stem along +x, then two 45-degree diamond branches of equal path length
// leaving the fork point and meeting again at the join point, then a tail.
inline Coords forked_branch(std::size_t n, double spacing) {
  const std::size_t n_stem = n / 4;
  const std::size_t n_branch = n / 4;
  const std::size_t n_tail = n - n_stem - 2 * n_branch;
  Coords c = chain(n_stem, spacing);
  const double fork_x = static_cast<double>(n_stem - 1) * spacing;
  const double leg = static_cast<double>(n_branch + 1) * spacing / 2.0;
  const double dx = leg * std::numbers::sqrt2 / 2.0;
  for (double side : {1.0, -1.0}) {
    for (std::size_t s = 1; s <= n_branch; ++s) {
      const double along = static_cast<double>(s) * spacing;
      const double up = along <= leg ? along : 2.0 * leg - along;
      c.push_back({fork_x + along * std::numbers::sqrt2 / 2.0, side * up * std::numbers::sqrt2 / 2.0});
    }
  }
  const double join_x = fork_x + 2.0 * dx;
  for (std::size_t i = 0; i < n_tail; ++i) c.push_back({join_x + static_cast<double>(i) * spacing, 0.0});
  return c;
}

inline Coords disk_uniform(std::size_t n, double disk_radius, UnitRng& rng) {
  Coords c;
  for (std::size_t i = 0; i < n; ++i) {
    const double rho = disk_radius * std::sqrt(rng.next());
    const double theta = 2.0 * std::numbers::pi * rng.next();
    c.push_back({rho * std::cos(theta), rho * std::sin(theta)});
  }
  return c;
}

// Square side holding n points at `density` expected points per unit disk.
inline double field_side(std::size_t n, double density) {
  return std::sqrt(static_cast<double>(n) * std::numbers::pi / density);
}

inline Coords square_uniform(std::size_t n, double side, UnitRng& rng) {
  Coords c;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = (rng.next() - 0.5) * side;
    const double y = (rng.next() - 0.5) * side;
    c.push_back({x, y});
  }
  return c;
}

// Places groups left to right, bottom-aligned, with `gap` between bounding boxes.
inline std::pair<Coords, std::vector<int>> lay_out(const std::vector<Coords>& parts, double gap) {
  Coords out;
  std::vector<int> groups;
  double cursor = 0.0;
  for (std::size_t g = 0; g < parts.size(); ++g) {
    double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x, min_y = min_x;
    for (const auto& p : parts[g]) {
      min_x = std::min(min_x, p[0]);
      max_x = std::max(max_x, p[0]);
      min_y = std::min(min_y, p[1]);
    }
    for (const auto& p : parts[g]) {
      out.push_back({p[0] - min_x + cursor, p[1] - min_y});
      groups.push_back(static_cast<int>(g));
    }
    cursor += (max_x - min_x) + gap;
  }
  return {std::move(out), std::move(groups)};
}

inline Scenario to_scenario(const Coords& unit, std::vector<int> groups, double radius) {
  std::vector<Point> pts;
  pts.reserve(unit.size());
  for (std::size_t i = 0; i < unit.size(); ++i)
    pts.push_back({static_cast<NodeId>(i + 1), {unit[i][0] * radius, unit[i][1] * radius}});
  return {PointSet(std::move(pts)), std::move(groups)};
}

}  // namespace detail

inline Scenario generate_scenario(const ScenarioSpec& spec) {
  using namespace detail;
  require(std::isfinite(spec.radius) && spec.radius > 0.0, "radius must be positive");
  const auto one_group = [](std::size_t n) { return std::vector<int>(n, 0); };
  const bool needs_spacing = spec.kind == ScenarioKind::kChain || spec.kind == ScenarioKind::kThickChain ||
                             spec.kind == ScenarioKind::kForkedBranch;
  if (needs_spacing) require(std::isfinite(spec.spacing) && spec.spacing > 0.0, "spacing must be positive");

  switch (spec.kind) {
    case ScenarioKind::kChain:
      require(spec.n >= 1, "chain needs n >= 1");
      return to_scenario(chain(spec.n, spec.spacing), one_group(spec.n), spec.radius);
    case ScenarioKind::kThickChain:
      require(spec.n >= 1, "thick-chain needs n >= 1");
      return to_scenario(thick_chain(spec.n, spec.spacing), one_group(spec.n), spec.radius);
    case ScenarioKind::kBlob:
      require(spec.n >= 1, "blob needs n >= 1");
      return to_scenario(blob(spec.n), one_group(spec.n), spec.radius);
    case ScenarioKind::kRing:
      require(spec.n >= 3, "ring needs n >= 3");
      require(std::isfinite(spec.ring_radius) && spec.ring_radius > 0.0, "ring_radius must be positive");
      return to_scenario(ring(spec.n, spec.ring_radius), one_group(spec.n), spec.radius);
    case ScenarioKind::kForkedBranch:
      require(spec.n >= 4, "forked-branch needs n >= 4");
      return to_scenario(forked_branch(spec.n, spec.spacing), one_group(spec.n), spec.radius);
    case ScenarioKind::kDenseCoreWithScatter: {
      require(spec.n_core >= 1, "dense-core-with-scatter needs n_core >= 1");
      require(spec.n_scatter < spec.n_core, "dense-core-with-scatter needs n_scatter < n_core");
      UnitRng rng(spec.seed);
      Coords c = disk_uniform(spec.n_core, 0.45, rng);
      const Coords scatter = square_uniform(spec.n_scatter, field_side(spec.n_scatter, kLowDensity), rng);
      c.insert(c.end(), scatter.begin(), scatter.end());
      std::vector<int> groups(spec.n_core, 0);
      groups.resize(spec.n_core + spec.n_scatter, -1);
      return to_scenario(c, std::move(groups), spec.radius);
    }
    case ScenarioKind::kUniformRandom: {
      require(spec.n >= 1, "uniform-random needs n >= 1");
      require(std::isfinite(spec.density) && spec.density > 0.0, "density must be positive");
      UnitRng rng(spec.seed);
      return to_scenario(square_uniform(spec.n, field_side(spec.n, spec.density), rng),
                         std::vector<int>(spec.n, -1), spec.radius);
    }
    case ScenarioKind::kMixedShapes: {
      auto [c, g] = lay_out({blob(19), chain(14, 0.9), thick_chain(13, 0.9), ring(10, 1.375), blob(6),
                             chain(4, 0.9), chain(1, 0.9)},
                            2.0);
      return to_scenario(c, std::move(g), spec.radius);
    }
    case ScenarioKind::kBranchingPaths: {
      auto [c, g] = lay_out({forked_branch(40, 0.9), chain(12, 0.9), chain(8, 0.9), chain(5, 0.9)}, 2.0);
      return to_scenario(c, std::move(g), spec.radius);
    }
  }
  throw InvariantError("unhandled scenario kind");
}

inline PointSet generate(const ScenarioSpec& spec) { return generate_scenario(spec).points; }

}  // namespace sciclust
