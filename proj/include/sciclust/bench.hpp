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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "sciclust/clustering.hpp"
#include "sciclust/error.hpp"
#include "sciclust/matpower.hpp"
#include "sciclust/scenarios.hpp"

namespace sciclust {

/// Largest N for which the sequential k-fold product is actually run.
inline constexpr std::size_t kNaiveBenchLimit = 64;

/// Expected degree of the random radius graphs used for timing.
inline constexpr double kBenchDensity = 3.0;

struct BenchRow {
  PowerPlan plan;
  std::size_t fast_mults_measured = 0;
  bool naive_executed = false;
  std::size_t naive_mults_measured = 0;  // valid when naive_executed
  bool partitions_equal = false;         // valid when naive_executed
  bool fast_contains_naive = false;      // valid when naive_executed
  double wall_ms = 0.0;                  // power_fast only
};

/// For every N: evaluates the power plan, squares a seeded random radius-graph
/// adjacency matrix, and for N <= kNaiveBenchLimit also runs the sequential
/// product and compares the resulting partitions.
inline std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed) {
  if (sizes.empty()) throw InputError("bench needs at least one N");
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    if (n < 1) throw InputError("bench N must be >= 1");
    ScenarioSpec spec;
    spec.kind = ScenarioKind::kUniformRandom;
    spec.n = n;
    spec.density = kBenchDensity;
    spec.seed = seed + n;
    const BinaryMatrix a = build_adjacency(generate(spec), ClusteringConfig{spec.radius});

    BenchRow row;
    row.plan = make_power_plan(n);
    const auto start = std::chrono::steady_clock::now();
    const PowerResult fast = power_fast(a);
    const auto stop = std::chrono::steady_clock::now();
    row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    row.fast_mults_measured = fast.multiplications;

    if (n <= kNaiveBenchLimit) {
      const PowerResult naive = power_naive_oracle(a);
      row.naive_executed = true;
      row.naive_mults_measured = naive.multiplications;
      row.partitions_equal = cluster_labels(fast.matrix) == cluster_labels(naive.matrix);
      row.fast_contains_naive = fast.matrix.contains(naive.matrix);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sciclust
