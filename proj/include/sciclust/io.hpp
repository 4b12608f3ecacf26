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

// File formats.
//
// Point CSV:       header `id,<c1>[,<c2>...]`, one node per row. Ids are integers.
// Trajectory CSV:  header `t,id,<c1>[,<c2>...]`, rows grouped by non-decreasing t;
//                  all rows sharing a t form one frame.
// Cluster JSON:    {"radius": r, "n": N, "labels": [...],
//                   "clusters": [{"label": c, "size": f, "rank": j, "color": name}, ...]}
//                  labels are index-aligned with the CSV rows; clusters are in rank order.
// Frames JSON:     {"radius": r, "frames": [{"t": t, "n": N, "ids": [...], "labels": [...],
//                   "clusters": [...]}, ...]}
// Events JSON:     [{"t": t, "kind": "split"|"merge", "parents": [...], "children": [...],
//                   "member_ids": [...]}, ...]
// Bench JSON:      {"seed": s, "results": [{"n", "k", "m", "naive_mults", "fast_mults",
//                   "naive_executed"[, "naive_mults_measured", "partitions_equal",
//                   "fast_contains_naive"][, "wall_ms"]}, ...]}
//
// All writers emit UTF-8 with LF line endings and a fixed key order, so equal
// inputs produce equal bytes.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sciclust/bench.hpp"
#include "sciclust/clustering.hpp"
#include "sciclust/error.hpp"
#include "sciclust/geometry.hpp"
#include "sciclust/scenarios.hpp"
#include "sciclust/trajectory.hpp"

namespace sciclust::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string at_line(std::size_t line, std::string_view what) {
  return "line " + std::to_string(line) + ": " + std::string(what);
}

inline double parse_double(std::string_view field, std::size_t line, std::string_view column) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
    throw InputError(at_line(line, "bad number '" + std::string(field) + "' in column " + std::string(column)));
  if (!std::isfinite(v)) throw InputError(at_line(line, "non-finite value in column " + std::string(column)));
  return v;
}

inline NodeId parse_id(std::string_view field, std::size_t line) {
  NodeId v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
    throw InputError(at_line(line, "bad id '" + std::string(field) + "'"));
  return v;
}

struct Row {
  std::size_t line = 0;
  std::vector<std::string_view> fields;
};

// Header plus data rows; blank lines are skipped. `text` must outlive the rows.
inline std::vector<Row> read_rows(std::string_view text, std::vector<std::string_view>& header) {
  std::vector<Row> rows;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (trim(line).empty()) continue;
    auto fields = split_fields(line);
    if (!have_header) {
      header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != header.size())
      throw InputError(at_line(line_no, "expected " + std::to_string(header.size()) + " fields, got " +
                                            std::to_string(fields.size())));
    rows.push_back({line_no, std::move(fields)});
  }
  if (!have_header) throw InputError("line 1: missing header");
  return rows;
}

inline void append_number(std::string& out, double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, end);
}

inline std::string coordinate_header(std::size_t d) {
  static constexpr std::string_view kNames[] = {"x", "y", "z"};
  std::string h;
  for (std::size_t k = 0; k < d; ++k) {
    if (k) h += ',';
    h += d <= 3 ? std::string(kNames[k]) : "x" + std::to_string(k + 1);
  }
  return h;
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw InputError("failed writing '" + path + "'");
}

inline PointSet parse_points_csv(std::string_view text) {
  std::vector<std::string_view> header;
  const auto rows = detail::read_rows(text, header);
  if (header.size() < 2 || header[0] != "id")
    throw InputError("line 1: header must be id,<coord>[,<coord>...]");
  if (rows.empty()) throw InputError("no points");
  std::vector<Point> pts;
  pts.reserve(rows.size());
  std::unordered_set<NodeId> seen;
  for (const auto& row : rows) {
    Point p;
    p.id = detail::parse_id(row.fields[0], row.line);
    if (!seen.insert(p.id).second) throw InputError(detail::at_line(row.line, "duplicate id " + std::to_string(p.id)));
    for (std::size_t k = 1; k < row.fields.size(); ++k)
      p.coords.push_back(detail::parse_double(row.fields[k], row.line, header[k]));
    pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

inline std::vector<Frame> parse_trajectory_csv(std::string_view text) {
  std::vector<std::string_view> header;
  const auto rows = detail::read_rows(text, header);
  if (header.size() < 3 || header[0] != "t" || header[1] != "id")
    throw InputError("line 1: header must be t,id,<coord>[,<coord>...]");
  if (rows.empty()) throw InputError("no trajectory rows");

  std::vector<Frame> frames;
  std::vector<Point> current;
  double current_t = 0.0;
  const auto flush = [&] {
    try {
      frames.push_back({current_t, PointSet(std::move(current))});
    } catch (const InputError& e) {
      throw InputError("frame at t=" + format_time(current_t) + ": " + e.what());
    }
    current.clear();
  };
  for (const auto& row : rows) {
    const double t = detail::parse_double(row.fields[0], row.line, "t");
    if (!current.empty() && t != current_t) {
      if (t < current_t)
        throw InputError(detail::at_line(row.line, "timestamp " + format_time(t) + " decreases"));
      flush();
    }
    current_t = t;
    Point p;
    p.id = detail::parse_id(row.fields[1], row.line);
    for (std::size_t k = 2; k < row.fields.size(); ++k)
      p.coords.push_back(detail::parse_double(row.fields[k], row.line, header[k]));
    current.push_back(std::move(p));
  }
  flush();
  validate_frames(frames);
  return frames;
}

inline std::string write_points_csv(const PointSet& ps) {
  std::string out = "id," + detail::coordinate_header(ps.dimension()) + "\n";
  for (const Point& p : ps) {
    out += std::to_string(p.id);
    for (double c : p.coords) {
      out += ',';
      detail::append_number(out, c);
    }
    out += '\n';
  }
  return out;
}

inline std::string write_trajectory_csv(const std::vector<Frame>& frames) {
  if (frames.empty()) throw InputError("no frames");
  std::string out = "t,id," + detail::coordinate_header(frames.front().points.dimension()) + "\n";
  for (const Frame& fr : frames) {
    for (const Point& p : fr.points) {
      detail::append_number(out, fr.t);
      out += ',' + std::to_string(p.id);
      for (double c : p.coords) {
        out += ',';
        detail::append_number(out, c);
      }
      out += '\n';
    }
  }
  return out;
}

/// Mean Earth radius in meters used by the equirectangular projection.
inline constexpr double kEarthRadius = 6371008.8;

/// Converts (lon, lat) degrees in the first two coordinates to local planar
/// meters (x east, y north) about the first frame's centroid.
inline std::vector<Frame> project_equirect(const std::vector<Frame>& frames) {
  if (frames.empty()) return {};
  if (frames.front().points.dimension() != 2) throw InputError("equirect projection needs lon,lat columns");
  double lon0 = 0.0, lat0 = 0.0;
  for (const Point& p : frames.front().points) {
    lon0 += p.coords[0];
    lat0 += p.coords[1];
  }
  lon0 /= static_cast<double>(frames.front().points.size());
  lat0 /= static_cast<double>(frames.front().points.size());
  const double deg = std::numbers::pi / 180.0;
  const double cos_lat0 = std::cos(lat0 * deg);
  std::vector<Frame> out;
  out.reserve(frames.size());
  for (const Frame& fr : frames) {
    std::vector<Point> pts;
    for (const Point& p : fr.points) {
      if (std::abs(p.coords[1]) > 90.0 || std::abs(p.coords[0]) > 180.0)
        throw InputError("frame at t=" + format_time(fr.t) + ": coordinate out of lon/lat range for id " +
                         std::to_string(p.id));
      pts.push_back({p.id,
                     {kEarthRadius * (p.coords[0] - lon0) * deg * cos_lat0, kEarthRadius * (p.coords[1] - lat0) * deg}});
    }
    out.push_back({fr.t, PointSet(std::move(pts))});
  }
  return out;
}

inline Json clusters_json(const ClusterTable& table) {
  Json arr = Json::array();
  for (const ClusterRecord& rec : table.records)
    arr.push_back({{"label", rec.label}, {"size", rec.size}, {"rank", rec.rank},
                   {"color", std::string(rank_color(rec.rank))}});
  return arr;
}

inline Json cluster_json(const ClusteringResult& result, double radius) {
  Json j;
  j["radius"] = radius;
  j["n"] = result.labels.size();
  j["labels"] = result.labels.labels;
  j["clusters"] = clusters_json(result.table);
  return j;
}

inline Json frames_json(const std::vector<Frame>& frames, const std::vector<ClusteringResult>& results,
                        double radius) {
  Json arr = Json::array();
  for (std::size_t f = 0; f < frames.size(); ++f) {
    std::vector<NodeId> ids;
    for (const Point& p : frames[f].points) ids.push_back(p.id);
    Json fr;
    fr["t"] = frames[f].t;
    fr["n"] = ids.size();
    fr["ids"] = ids;
    fr["labels"] = results[f].labels.labels;
    fr["clusters"] = clusters_json(results[f].table);
    arr.push_back(std::move(fr));
  }
  Json j;
  j["radius"] = radius;
  j["frames"] = std::move(arr);
  return j;
}

inline Json events_json(const std::vector<ClusterEvent>& events) {
  Json arr = Json::array();
  for (const ClusterEvent& e : events)
    arr.push_back({{"t", e.t}, {"kind", std::string(to_string(e.kind))}, {"parents", e.parents},
                   {"children", e.children}, {"member_ids", e.member_ids}});
  return arr;
}

inline Json bench_json(const std::vector<BenchRow>& rows, std::uint64_t seed, bool with_timing) {
  Json arr = Json::array();
  for (const BenchRow& r : rows) {
    Json j;
    j["n"] = r.plan.n;
    j["k"] = r.plan.k;
    j["m"] = r.plan.m;
    j["naive_mults"] = r.plan.naive_mults;
    j["fast_mults"] = r.fast_mults_measured;
    j["naive_executed"] = r.naive_executed;
    if (r.naive_executed) {
      j["naive_mults_measured"] = r.naive_mults_measured;
      j["partitions_equal"] = r.partitions_equal;
      j["fast_contains_naive"] = r.fast_contains_naive;
    }
    if (with_timing) j["wall_ms"] = r.wall_ms;
    arr.push_back(std::move(j));
  }
  Json j;
  j["seed"] = seed;
  j["results"] = std::move(arr);
  return j;
}

namespace detail {

template <typename T>
void read_key(const Json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("spec: bad value for '") + key + "'");
  }
}

inline void reject_unknown_keys(const Json& j, std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw InputError("spec: unknown key '" + key + "'");
}

}  // namespace detail

/// Scenario spec from a JSON object, e.g. {"kind": "ring", "n": 24, "ring_radius": 3.5}.
/// Missing keys keep their ScenarioSpec defaults.
inline ScenarioSpec scenario_spec_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("spec: expected a JSON object");
  detail::reject_unknown_keys(
      j, {"kind", "radius", "n", "spacing", "ring_radius", "n_core", "n_scatter", "density", "seed"});
  ScenarioSpec spec;
  std::string kind = std::string(to_string(spec.kind));
  detail::read_key(j, "kind", kind);
  spec.kind = parse_scenario_kind(kind);
  detail::read_key(j, "radius", spec.radius);
  detail::read_key(j, "n", spec.n);
  detail::read_key(j, "spacing", spec.spacing);
  detail::read_key(j, "ring_radius", spec.ring_radius);
  detail::read_key(j, "n_core", spec.n_core);
  detail::read_key(j, "n_scatter", spec.n_scatter);
  detail::read_key(j, "density", spec.density);
  detail::read_key(j, "seed", spec.seed);
  return spec;
}

/// Motorcade spec from a JSON object; `kind` must be "motorcade" when present.
inline MotorcadeSpec motorcade_spec_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("spec: expected a JSON object");
  detail::reject_unknown_keys(
      j, {"kind", "cars", "stragglers", "radius", "spacing", "speed", "frames", "split_t", "merge_t"});
  MotorcadeSpec spec;
  detail::read_key(j, "cars", spec.cars);
  detail::read_key(j, "stragglers", spec.stragglers);
  detail::read_key(j, "radius", spec.radius);
  detail::read_key(j, "spacing", spec.spacing);
  detail::read_key(j, "speed", spec.speed);
  detail::read_key(j, "frames", spec.frames);
  detail::read_key(j, "split_t", spec.split_t);
  detail::read_key(j, "merge_t", spec.merge_t);
  return spec;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Scatter plot of the first two coordinates (1-D sets are drawn on y = 0),
/// each node filled with its cluster's rank color. The viewport is the data
/// bounding box plus a 5% margin on every side, mapped onto an 800-pixel-wide
/// canvas with y pointing up.
inline std::string render_svg(const PointSet& ps, const LabelVector& labels, const ClusterTable& table) {
  if (labels.size() != ps.size()) throw InputError("render_svg: labels and points differ in length");
  constexpr double kWidth = 800.0;
  constexpr double kMarker = 4.0;
  const auto xy = [&](std::size_t i) {
    const auto& c = ps[i].coords;
    return std::pair<double, double>{c[0], c.size() > 1 ? c[1] : 0.0};
  };
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x, min_y = min_x, max_y = -min_x;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto [x, y] = xy(i);
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  double span_x = max_x - min_x, span_y = max_y - min_y;
  if (span_x <= 0.0) span_x = 1.0;
  if (span_y <= 0.0) span_y = span_x;
  min_x -= 0.05 * span_x;
  min_y -= 0.05 * span_y;
  span_x *= 1.1;
  span_y *= 1.1;
  const double scale = kWidth / span_x;
  const double height = std::max(1.0, span_y * scale);

  std::vector<std::size_t> rank_of(table.cluster_count() + 1, 0);
  for (const ClusterRecord& rec : table.records) rank_of[rec.label] = rec.rank;

  char buf[160];
  std::string out;
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                kWidth, height, kWidth, height);
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto [x, y] = xy(i);
    const std::size_t rank = rank_of.at(labels[i]);
    std::snprintf(buf, sizeof(buf), "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\" fill=\"%s\"/>\n",
                  (x - min_x) * scale, height - (y - min_y) * scale, kMarker,
                  std::string(rank_color(rank)).c_str());
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace sciclust::io
