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

// Clusters a ring and a chain that share no centroid, then prints the
// size ranking with display colors.

#include <cmath>
#include <iostream>
#include <vector>

#include "sciclust.hpp"

int main() {
  std::vector<sciclust::Point> pts;
  sciclust::NodeId id = 1;
  for (int k = 0; k < 24; ++k) {
    const double theta = 2.0 * 3.141592653589793 * k / 24.0;
    pts.push_back({id++, {3.5 * std::cos(theta), 3.5 * std::sin(theta)}});
  }
  for (int i = 0; i < 10; ++i) pts.push_back({id++, {10.0 + 0.9 * i, 0.0}});

  const sciclust::PointSet ps(std::move(pts));
  const auto result = sciclust::cluster_pointset(ps, {1.0});

  std::cout << result.table.cluster_count() << " clusters after " << result.multiplications
            << " squarings\n";
  for (const auto& rec : result.table.records)
    std::cout << "  rank " << rec.rank << ": label " << rec.label << ", " << rec.size << " nodes ("
              << sciclust::rank_color(rec.rank) << ")\n";
}
