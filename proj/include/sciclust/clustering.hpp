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

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "sciclust/binary_matrix.hpp"
#include "sciclust/error.hpp"
#include "sciclust/geometry.hpp"
#include "sciclust/matpower.hpp"

namespace sciclust {

using Label = std::size_t;

/// Per-node cluster labels. Labels are dense, 1-based, and numbered in order
/// of the lowest node index belonging to each cluster.
struct LabelVector {
  std::vector<Label> labels;

  [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
  [[nodiscard]] Label operator[](std::size_t i) const { return labels[i]; }
  [[nodiscard]] std::size_t cluster_count() const noexcept {
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
  }

  friend bool operator==(const LabelVector&, const LabelVector&) = default;
};

struct ClusterRecord {
  Label label = 0;
  std::size_t size = 0;
  std::size_t rank = 0;  // 1-based position in the size ranking

  bool operator==(const ClusterRecord&) const = default;
};

struct ClusterTable {
  std::vector<std::size_t> frequencies;  // frequencies[c - 1] is the node count of label c
  std::vector<Label> ranking;            // labels by descending size, ties by ascending label
  std::vector<ClusterRecord> records;    // one per ranking entry, in ranking order

  [[nodiscard]] std::size_t frequency(Label c) const { return frequencies.at(c - 1); }
  [[nodiscard]] std::size_t cluster_count() const noexcept { return frequencies.size(); }

  friend bool operator==(const ClusterTable&, const ClusterTable&) = default;
};

struct ClusteringResult {
  LabelVector labels;
  ClusterTable table;
  std::size_t multiplications = 0;
};

/// Display color for a 1-based size rank. The three largest clusters are
/// red, green and blue; smaller ones cycle through a fixed palette.
inline std::string_view rank_color(std::size_t rank) {
  static constexpr std::array<std::string_view, 3> kTop = {"red", "green", "blue"};
  static constexpr std::array<std::string_view, 8> kPalette = {
      "orange", "purple", "cyan", "magenta", "brown", "olive", "teal", "gray"};
  if (rank == 0) throw InputError("rank is 1-based");
  if (rank <= kTop.size()) return kTop[rank - 1];
  return kPalette[(rank - kTop.size() - 1) % kPalette.size()];
}

/// Mask labeling over the binarized power matrix G.
///
/// Scans seeds i = 0..N-1 in order. An unlabeled seed gets a fresh label c
/// and its row becomes the mask M; every later unlabeled node j whose row
/// AND M is non-zero joins cluster c.
inline LabelVector cluster_labels(const BinaryMatrix& g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    if (g.row_is_zero(i)) throw InputError("power matrix row " + std::to_string(i) + " is all zero");

  LabelVector lv;
  lv.labels.assign(n, 0);
  std::size_t unlabeled = n;
  Label next = 1;
  std::size_t i = 0;
  while (unlabeled > 0) {
    if (i >= n) throw InvariantError("label scan ran past the last node with nodes still unlabeled");
    if (lv.labels[i] == 0) {
      lv.labels[i] = next++;
      --unlabeled;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (lv.labels[j] == 0 && g.rows_intersect(i, j)) {
          lv.labels[j] = lv.labels[i];
          --unlabeled;
        }
      }
    }
    ++i;
  }
  return lv;
}

/// Breadth-first connected components of the adjacency graph, numbered by
/// lowest unlabeled node index first. Independent of the matrix-power path.
inline LabelVector connected_components_oracle(const BinaryMatrix& a) {
  if (!a.is_symmetric()) throw InputError("adjacency matrix is not symmetric");
  const std::size_t n = a.size();
  LabelVector lv;
  lv.labels.assign(n, 0);
  Label next = 1;
  std::queue<std::size_t> frontier;
  for (std::size_t s = 0; s < n; ++s) {
    if (lv.labels[s] != 0) continue;
    lv.labels[s] = next;
    frontier.push(s);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (lv.labels[v] == 0 && a.get(u, v)) {
          lv.labels[v] = next;
          frontier.push(v);
        }
      }
    }
    ++next;
  }
  return lv;
}

inline ClusterTable build_cluster_table(const LabelVector& lv) {
  ClusterTable table;
  for (Label l : lv.labels) {
    if (l == 0) throw InputError("label vector has unassigned entries");
    if (l > table.frequencies.size()) table.frequencies.resize(l, 0);
    ++table.frequencies[l - 1];
  }
  table.ranking.resize(table.frequencies.size());
  std::iota(table.ranking.begin(), table.ranking.end(), Label{1});
  std::stable_sort(table.ranking.begin(), table.ranking.end(), [&](Label a, Label b) {
    return table.frequencies[a - 1] > table.frequencies[b - 1];
  });
  table.records.reserve(table.ranking.size());
  for (std::size_t r = 0; r < table.ranking.size(); ++r) {
    const Label c = table.ranking[r];
    table.records.push_back({c, table.frequencies[c - 1], r + 1});
  }
  return table;
}

/// adjacency -> repeated squaring -> mask labeling -> size table.
inline ClusteringResult cluster_pointset(const PointSet& ps, const ClusteringConfig& cfg) {
  const BinaryMatrix a = build_adjacency(ps, cfg);
  PowerResult g = power_fast(a);
  ClusteringResult result;
  result.labels = cluster_labels(g.matrix);
  result.table = build_cluster_table(result.labels);
  result.multiplications = g.multiplications;
  return result;
}

}  // namespace sciclust
