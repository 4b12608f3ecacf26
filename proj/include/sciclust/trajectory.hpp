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
#include <charconv>
#include <cstddef>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "sciclust/clustering.hpp"
#include "sciclust/error.hpp"
#include "sciclust/geometry.hpp"

namespace sciclust {

struct Frame {
  double t = 0.0;
  PointSet points;
};

enum class EventKind { kSplit, kMerge };

inline std::string_view to_string(EventKind kind) { return kind == EventKind::kSplit ? "split" : "merge"; }

/// A change in cluster membership between the frame before `t` and frame `t`.
/// `parents` are labels in the earlier frame, `children` labels at `t`.
struct ClusterEvent {
  double t = 0.0;
  EventKind kind = EventKind::kSplit;
  std::vector<Label> parents;
  std::vector<Label> children;
  std::vector<NodeId> member_ids;

  friend bool operator==(const ClusterEvent&, const ClusterEvent&) = default;
};

/// Shortest round-trip text for a timestamp, for error messages and output.
inline std::string format_time(double t) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), t);
  return std::string(buf, end);
}

/// Throws unless every frame carries the first frame's id set and timestamps
/// never decrease.
inline void validate_frames(const std::vector<Frame>& frames) {
  if (frames.empty()) return;
  std::set<NodeId> reference;
  for (const Point& p : frames.front().points) reference.insert(p.id);
  for (std::size_t f = 0; f < frames.size(); ++f) {
    const Frame& fr = frames[f];
    if (f > 0 && fr.t < frames[f - 1].t)
      throw InputError("frame at t=" + format_time(fr.t) + " is out of order");
    std::set<NodeId> ids;
    for (const Point& p : fr.points) ids.insert(p.id);
    if (ids != reference) {
      std::vector<NodeId> missing, extra;
      std::set_difference(reference.begin(), reference.end(), ids.begin(), ids.end(), std::back_inserter(missing));
      std::set_difference(ids.begin(), ids.end(), reference.begin(), reference.end(), std::back_inserter(extra));
      std::string what = "frame at t=" + format_time(fr.t) + " has inconsistent ids";
      if (!missing.empty()) what += " (missing " + std::to_string(missing.front()) + ")";
      if (!extra.empty()) what += " (extra " + std::to_string(extra.front()) + ")";
      throw InputError(what);
    }
  }
}

/// Clusters every frame on its own; results are index-aligned with `frames`.
inline std::vector<ClusteringResult> cluster_frames(const std::vector<Frame>& frames, const ClusteringConfig& cfg) {
  cfg.validate();
  validate_frames(frames);
  std::vector<ClusteringResult> out;
  out.reserve(frames.size());
  for (const Frame& fr : frames) out.push_back(cluster_pointset(fr.points, cfg));
  return out;
}

/// Split/merge detection from member overlap between consecutive frames.
///
/// A cluster at t-1 whose members end up in two or more clusters at t is a
/// split; a cluster at t holding members of two or more clusters from t-1 is
/// a merge. Events are ordered by t, then split before merge, then by the
/// lowest member id.
inline std::vector<ClusterEvent> detect_events(const std::vector<ClusteringResult>& results,
                                               const std::vector<Frame>& frames) {
  if (results.size() != frames.size()) throw InputError("detect_events: results and frames differ in length");
  std::vector<ClusterEvent> events;
  for (std::size_t f = 1; f < frames.size(); ++f) {
    std::unordered_map<NodeId, Label> prev_label;
    const PointSet& prev = frames[f - 1].points;
    for (std::size_t i = 0; i < prev.size(); ++i) prev_label[prev[i].id] = results[f - 1].labels[i];

    std::map<Label, std::set<Label>> children_of;
    std::map<Label, std::set<Label>> parents_of;
    std::map<Label, std::vector<NodeId>> prev_members;
    std::map<Label, std::vector<NodeId>> cur_members;
    const PointSet& cur = frames[f].points;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const NodeId id = cur[i].id;
      const auto it = prev_label.find(id);
      if (it == prev_label.end()) throw InputError("frame at t=" + format_time(frames[f].t) + " has inconsistent ids");
      const Label parent = it->second;
      const Label child = results[f].labels[i];
      children_of[parent].insert(child);
      parents_of[child].insert(parent);
      prev_members[parent].push_back(id);
      cur_members[child].push_back(id);
    }

    const double t = frames[f].t;
    for (const auto& [parent, children] : children_of) {
      if (children.size() < 2) continue;
      std::vector<NodeId> members = prev_members[parent];
      std::sort(members.begin(), members.end());
      events.push_back({t, EventKind::kSplit, {parent}, {children.begin(), children.end()}, std::move(members)});
    }
    for (const auto& [child, parents] : parents_of) {
      if (parents.size() < 2) continue;
      std::vector<NodeId> members = cur_members[child];
      std::sort(members.begin(), members.end());
      events.push_back({t, EventKind::kMerge, {parents.begin(), parents.end()}, {child}, std::move(members)});
    }
  }
  std::stable_sort(events.begin(), events.end(), [](const ClusterEvent& a, const ClusterEvent& b) {
    return std::tuple(a.t, a.kind, a.member_ids.front()) < std::tuple(b.t, b.kind, b.member_ids.front());
  });
  return events;
}

/// Synthetic convoy: cars in single file `spacing` radii apart moving along
/// +x. The last `stragglers` cars fall back far enough to lose contact from
/// frame `split_t` on, and close the gap again so they rejoin at `merge_t`.
/// The gap crosses the contact threshold halfway between integer frames.
struct MotorcadeSpec {
  std::size_t cars = 7;
  std::size_t stragglers = 2;
  double radius = 30.0;  // meters
  double spacing = 0.8;  // in radii
  double speed = 10.0;   // meters per frame
  std::size_t frames = 181;
  std::size_t split_t = 35;
  std::size_t merge_t = 139;
};

inline std::vector<Frame> synthetic_motorcade(const MotorcadeSpec& spec = {}) {
  if (spec.cars < 2 || spec.stragglers == 0 || spec.stragglers >= spec.cars)
    throw InputError("motorcade needs 0 < stragglers < cars");
  if (!(spec.radius > 0.0) || !(spec.spacing > 0.0) || !(spec.spacing < 1.0))
    throw InputError("motorcade needs radius > 0 and 0 < spacing < 1");
  if (spec.merge_t <= spec.split_t + 1 || spec.merge_t >= spec.frames || spec.split_t == 0)
    throw InputError("motorcade needs 0 < split_t < merge_t - 1 and merge_t < frames");

  constexpr double kRate = 0.06;  // radii per frame
  constexpr double kMaxGap = 1.5;
  const double threshold = 1.0 - spec.spacing;
  std::vector<Frame> out;
  out.reserve(spec.frames);
  for (std::size_t t = 0; t < spec.frames; ++t) {
    const double td = static_cast<double>(t);
    const double opening = threshold + kRate * (td - static_cast<double>(spec.split_t) + 0.5);
    const double closing = threshold - kRate * (td - static_cast<double>(spec.merge_t) + 0.5);
    const double gap = std::max(0.0, std::min({opening, closing, kMaxGap}));
    std::vector<Point> pts;
    for (std::size_t c = 0; c < spec.cars; ++c) {
      double x = spec.speed * td - static_cast<double>(c) * spec.spacing * spec.radius;
      if (c >= spec.cars - spec.stragglers) x -= gap * spec.radius;
      pts.push_back({static_cast<NodeId>(c + 1), {x, 0.0}});
    }
    out.push_back({td, PointSet(std::move(pts))});
  }
  return out;
}

}  // namespace sciclust
