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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sciclust/binary_matrix.hpp"
#include "sciclust/error.hpp"

namespace sciclust {

using NodeId = std::int64_t;

struct Point {
  NodeId id = 0;
  std::vector<double> coords;
};

/// Ordered, validated collection of points. The order of `points()` is the
/// node index order used by every matrix and label vector downstream.
class PointSet {
 public:
  PointSet() = default;

  explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) throw InputError("point set is empty");
    dimension_ = points_.front().coords.size();
    std::unordered_set<NodeId> seen;
    seen.reserve(points_.size());
    for (const Point& p : points_) {
      if (p.coords.empty()) throw InputError("point " + std::to_string(p.id) + " has no coordinates");
      if (p.coords.size() != dimension_)
        throw InputError("point " + std::to_string(p.id) + " has dimension " +
                         std::to_string(p.coords.size()) + ", expected " + std::to_string(dimension_));
      for (double c : p.coords)
        if (!std::isfinite(c)) throw InputError("point " + std::to_string(p.id) + " has a non-finite coordinate");
      if (!seen.insert(p.id).second) throw InputError("duplicate id " + std::to_string(p.id));
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
  [[nodiscard]] const std::vector<Point>& points() const noexcept { return points_; }
  [[nodiscard]] const Point& operator[](std::size_t i) const { return points_[i]; }

  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

 private:
  std::vector<Point> points_;
  std::size_t dimension_ = 0;
};

struct ClusteringConfig {
  double radius = 1.0;

  void validate() const {
    if (!std::isfinite(radius) || !(radius > 0.0))
      throw InputError("radius must be positive and finite");
  }
};

inline double euclidean_distance(const Point& a, const Point& b) {
  if (a.coords.size() != b.coords.size())
    throw InputError("dimension mismatch: " + std::to_string(a.coords.size()) + " vs " +
                     std::to_string(b.coords.size()));
  double sum = 0.0;
  for (std::size_t k = 0; k < a.coords.size(); ++k) {
    if (!std::isfinite(a.coords[k]) || !std::isfinite(b.coords[k]))
      throw InputError("non-finite coordinate");
    const double diff = a.coords[k] - b.coords[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

/// Radius-graph adjacency: entry (i, j) is 1 iff dist(p_i, p_j) < r.
/// The test is strict and includes i == j, so the diagonal is all ones.
inline BinaryMatrix build_adjacency(const PointSet& ps, const ClusteringConfig& cfg) {
  cfg.validate();
  const std::size_t n = ps.size();
  if (n == 0) throw InputError("point set is empty");
  BinaryMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.set(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (euclidean_distance(ps[i], ps[j]) < cfg.radius) {
        a.set(i, j);
        a.set(j, i);
      }
    }
  }
  return a;
}

}  // namespace sciclust
