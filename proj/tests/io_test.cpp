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

#include "sciclust/io.hpp"

#include <random>
#include <regex>
#include <string>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace sciclust::io {
namespace {

std::string error_of(const auto& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(PointsCsv, ParsesHeaderAndRows) {
  const PointSet ps = parse_points_csv("id,x,y\n3,0.5,-1\n7, 2 ,1e3\n\n");
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps[0].id, 3);
  EXPECT_EQ(ps[1].coords, (std::vector<double>{2.0, 1000.0}));
}

TEST(PointsCsv, AcceptsCrlfAndOtherDimensions) {
  EXPECT_EQ(parse_points_csv("id,x\r\n1,4\r\n").dimension(), 1u);
  EXPECT_EQ(parse_points_csv("id,x,y,z\n1,1,2,3\n").dimension(), 3u);
}

TEST(PointsCsv, ErrorsNameTheLine) {
  EXPECT_EQ(error_of([] { parse_points_csv("id,x,y\n1,0,0\n2,abc,0\n"); }), "line 3: bad number 'abc' in column x");
  EXPECT_EQ(error_of([] { parse_points_csv("id,x,y\n1,0,0\n2,0\n"); }), "line 3: expected 3 fields, got 2");
  EXPECT_EQ(error_of([] { parse_points_csv("id,x,y\n1,0,0\n\n1,2,2\n"); }), "line 4: duplicate id 1");
  EXPECT_EQ(error_of([] { parse_points_csv("id,x,y\nq,0,0\n"); }), "line 2: bad id 'q'");
  EXPECT_EQ(error_of([] { parse_points_csv("id,x,y\n1,nan,0\n"); }), "line 2: non-finite value in column x");
  EXPECT_FALSE(error_of([] { parse_points_csv("x,y\n1,2\n"); }).empty());
  EXPECT_FALSE(error_of([] { parse_points_csv("id,x,y\n"); }).empty());
  EXPECT_FALSE(error_of([] { parse_points_csv(""); }).empty());
}

// write -> parse keeps ids and coordinates bit-exact.
TEST(PointsCsvProperty, RoundTripIsExact) {
  std::mt19937_64 rng(90);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Point> pts;
    const std::size_t d = 1 + trial % 5;
    for (NodeId id = 0; id < 25; ++id) {
      Point p{id * 17 - 100, {}};
      for (std::size_t k = 0; k < d; ++k) p.coords.push_back(u(rng));
      pts.push_back(p);
    }
    const PointSet ps(pts);
    const PointSet back = parse_points_csv(write_points_csv(ps));
    ASSERT_EQ(back.size(), ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
      EXPECT_EQ(back[i].id, ps[i].id);
      EXPECT_EQ(back[i].coords, ps[i].coords);
    }
  }
}

TEST(TrajectoryCsv, GroupsRowsByTimestamp) {
  const auto frames = parse_trajectory_csv("t,id,x,y\n0,1,0,0\n0,2,1,0\n1.5,2,1,1\n1.5,1,0,1\n");
  ASSERT_EQ(frames.size(), 2u);
  EXPECT_EQ(frames[1].t, 1.5);
  EXPECT_EQ(frames[1].points[0].id, 2);
}

TEST(TrajectoryCsv, ErrorsNameTimestampOrLine) {
  EXPECT_EQ(error_of([] { parse_trajectory_csv("t,id,x,y\n0,1,0,0\n0,2,1,0\n4,1,0,0\n"); }),
            "frame at t=4 has inconsistent ids (missing 2)");
  EXPECT_EQ(error_of([] { parse_trajectory_csv("t,id,x,y\n0,1,0,0\n4,1,0,0\n4,3,0,0\n"); }),
            "frame at t=4 has inconsistent ids (extra 3)");
  EXPECT_EQ(error_of([] { parse_trajectory_csv("t,id,x,y\n0,1,0,0\n0,1,1,1\n"); }),
            "frame at t=0: duplicate id 1");
  EXPECT_EQ(error_of([] { parse_trajectory_csv("t,id,x,y\n2,1,0,0\n1,1,0,0\n"); }), "line 3: timestamp 1 decreases");
  EXPECT_FALSE(error_of([] { parse_trajectory_csv("id,t,x\n1,0,0\n"); }).empty());
}

TEST(TrajectoryCsv, RoundTrip) {
  const auto frames = synthetic_motorcade();
  const auto back = parse_trajectory_csv(write_trajectory_csv(frames));
  ASSERT_EQ(back.size(), frames.size());
  for (std::size_t f = 0; f < frames.size(); ++f) {
    EXPECT_EQ(back[f].t, frames[f].t);
    for (std::size_t i = 0; i < frames[f].points.size(); ++i)
      EXPECT_EQ(back[f].points[i].coords, frames[f].points[i].coords);
  }
}

TEST(Equirect, ProjectsAboutFirstFrameCentroid) {
  // Two points 0.001 degrees of latitude apart at the equator.
  const auto frames = parse_trajectory_csv("t,id,lon,lat\n0,1,45,0\n0,2,45,0.001\n");
  const auto projected = project_equirect(frames);
  const auto& ps = projected[0].points;
  EXPECT_NEAR(ps[0].coords[0], 0.0, 1e-9);
  EXPECT_NEAR(ps[1].coords[1] - ps[0].coords[1], kEarthRadius * 0.001 * std::numbers::pi / 180.0, 1e-6);
  EXPECT_NEAR(euclidean_distance(ps[0], ps[1]), 111.19, 0.01);
}

TEST(Equirect, LongitudeShrinksWithLatitude) {
  const auto frames = parse_trajectory_csv("t,id,lon,lat\n0,1,10,60\n0,2,10.001,60\n");
  const auto ps = project_equirect(frames)[0].points;
  EXPECT_NEAR(euclidean_distance(ps[0], ps[1]), 111.19 * 0.5, 0.01);
  EXPECT_THROW(project_equirect(parse_trajectory_csv("t,id,lon,lat\n0,1,10,95\n")), InputError);
}

TEST(ClusterJson, SchemaAndKeyOrder) {
  const ClusteringResult r = cluster_pointset(testing::unit_chain(7), {1.5});
  const Json j = cluster_json(r, 1.5);
  EXPECT_EQ(j.dump(),
            R"({"radius":1.5,"n":7,"labels":[1,1,1,1,1,1,1],)"
            R"("clusters":[{"label":1,"size":7,"rank":1,"color":"red"}]})");
}

TEST(EventsJson, Schema) {
  const std::vector<ClusterEvent> events = {{35.0, EventKind::kSplit, {1}, {1, 2}, {1, 2, 3}}};
  EXPECT_EQ(events_json(events).dump(),
            R"([{"t":35.0,"kind":"split","parents":[1],"children":[1,2],"member_ids":[1,2,3]}])");
  EXPECT_EQ(events_json({}).dump(), "[]");
}

TEST(BenchJson, TimingIsOptIn) {
  const auto rows = run_bench({2, 1000}, 1);
  const Json plain = bench_json(rows, 1, false);
  EXPECT_FALSE(plain["results"][0].contains("wall_ms"));
  EXPECT_EQ(plain["results"][1]["naive_mults"], 499);
  EXPECT_EQ(plain["results"][1]["fast_mults"], 9);
  EXPECT_FALSE(plain["results"][1]["naive_executed"].get<bool>());
  EXPECT_TRUE(bench_json(rows, 1, true)["results"][0].contains("wall_ms"));
}

TEST(ScenarioSpecJson, ReadsKnownKeysOnly) {
  const ScenarioSpec s = scenario_spec_from_json(Json::parse(R"({"kind":"ring","n":30,"ring_radius":4})"));
  EXPECT_EQ(s.kind, ScenarioKind::kRing);
  EXPECT_EQ(s.n, 30u);
  EXPECT_EQ(s.ring_radius, 4.0);
  EXPECT_THROW(scenario_spec_from_json(Json::parse(R"({"kind":"ring","nn":3})")), InputError);
  EXPECT_THROW(scenario_spec_from_json(Json::parse(R"({"n":"many"})")), InputError);
  EXPECT_THROW(scenario_spec_from_json(Json::parse(R"([1])")), InputError);
  EXPECT_EQ(motorcade_spec_from_json(Json::parse(R"({"kind":"motorcade","cars":9})")).cars, 9u);
}

TEST(Svg, OneCirclePerNodeColoredByRank) {
  const Scenario sc = generate_scenario({ScenarioKind::kBranchingPaths});
  const ClusteringResult r = cluster_pointset(sc.points, {1.0});
  const std::string svg = render_svg(sc.points, r.labels, r.table);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const std::regex circle(R"re(<circle cx="([-0-9.]+)" cy="([-0-9.]+)" r="4.0" fill="(\w+)"/>)re");
  std::size_t circles = 0, red = 0, green = 0, blue = 0, other = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), circle); it != std::sregex_iterator(); ++it) {
    ++circles;
    const double cx = std::stod((*it)[1]), cy = std::stod((*it)[2]);
    EXPECT_GE(cx, 0.0);
    EXPECT_LE(cx, 800.0);
    EXPECT_GE(cy, 0.0);
    const std::string color = (*it)[3];
    red += color == "red";
    green += color == "green";
    blue += color == "blue";
    other += color == "orange";
  }
  EXPECT_EQ(circles, sc.points.size());
  EXPECT_EQ(red, 40u);
  EXPECT_EQ(green, 12u);
  EXPECT_EQ(blue, 8u);
  EXPECT_EQ(other, 5u);
}

TEST(Svg, HandlesDegenerateExtent) {
  const PointSet one(std::vector<Point>{{1, {2.0}}});
  const ClusteringResult r = cluster_pointset(one, {1.0});
  EXPECT_NE(render_svg(one, r.labels, r.table).find("fill=\"red\""), std::string::npos);
}

}  // namespace
}  // namespace sciclust::io
