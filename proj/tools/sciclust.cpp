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

// sciclust command-line front end.
//
//   sciclust cluster    --input points.csv --radius R [--out labels.json] [--svg plot.svg]
//   sciclust generate   --kind KIND [--spec JSON|path] [--seed S] [--radius R] [--out points.csv] [--svg plot.svg]
//   sciclust trajectory --input traj.csv --radius R [--out frames.json] [--events events.json]
//                       [--svg-dir DIR] [--project equirect]
//   sciclust bench      --bench-n 2,7,10,100,1000 [--seed S] [--out bench.json] [--timing]
//
// Exit codes: 0 success, 1 input error, 2 internal invariant violation.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sciclust/io.hpp"
#include "sciclust.hpp"

namespace {

using sciclust::InputError;
namespace io = sciclust::io;

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    io::write_file(path, content);
}

void require_radius(double radius) { sciclust::ClusteringConfig{radius}.validate(); }

int run_cluster(const std::string& input, double radius, const std::string& out, const std::string& svg) {
  require_radius(radius);
  const sciclust::PointSet ps = io::parse_points_csv(io::read_file(input));
  const sciclust::ClusteringResult result = sciclust::cluster_pointset(ps, {radius});
  emit(out, io::dump(io::cluster_json(result, radius)));
  if (!svg.empty()) io::write_file(svg, io::render_svg(ps, result.labels, result.table));
  return 0;
}

io::Json load_spec(const std::string& spec) {
  if (spec.empty()) return io::Json::object();
  const std::string text = spec.front() == '{' ? spec : io::read_file(spec);
  try {
    return io::Json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw InputError("spec: not valid JSON");
  }
}

int run_generate(const std::string& kind, const std::string& spec_text, std::optional<std::uint64_t> seed,
                 std::optional<double> radius, const std::string& out, const std::string& svg) {
  io::Json spec_json = load_spec(spec_text);
  if (!spec_json.is_object()) throw InputError("spec: expected a JSON object");
  if (!kind.empty()) spec_json["kind"] = kind;
  if (radius) spec_json["radius"] = *radius;
  const std::string resolved = spec_json.value("kind", std::string("chain"));

  if (resolved == "motorcade") {
    if (seed) throw InputError("motorcade is deterministic and takes no seed");
    const auto frames = sciclust::synthetic_motorcade(io::motorcade_spec_from_json(spec_json));
    emit(out, io::write_trajectory_csv(frames));
    return 0;
  }
  if (seed) spec_json["seed"] = *seed;
  const sciclust::ScenarioSpec spec = io::scenario_spec_from_json(spec_json);
  const sciclust::PointSet ps = sciclust::generate(spec);
  emit(out, io::write_points_csv(ps));
  if (!svg.empty()) {
    const auto result = sciclust::cluster_pointset(ps, {spec.radius});
    io::write_file(svg, io::render_svg(ps, result.labels, result.table));
  }
  return 0;
}

int run_trajectory(const std::string& input, double radius, const std::string& out, const std::string& events_out,
                   const std::string& svg_dir, const std::string& project) {
  require_radius(radius);
  std::vector<sciclust::Frame> frames = io::parse_trajectory_csv(io::read_file(input));
  if (project == "equirect")
    frames = io::project_equirect(frames);
  else if (!project.empty())
    throw InputError("unknown projection '" + project + "'");
  const auto results = sciclust::cluster_frames(frames, {radius});
  const auto events = sciclust::detect_events(results, frames);
  emit(out, io::dump(io::frames_json(frames, results, radius)));
  if (!events_out.empty()) emit(events_out, io::dump(io::events_json(events)));
  if (!svg_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(svg_dir, ec);
    if (ec) throw InputError("cannot create '" + svg_dir + "'");
    for (std::size_t f = 0; f < frames.size(); ++f) {
      char name[32];
      std::snprintf(name, sizeof(name), "frame_%05zu.svg", f);
      io::write_file((std::filesystem::path(svg_dir) / name).string(),
                     io::render_svg(frames[f].points, results[f].labels, results[f].table));
    }
  }
  return 0;
}

int run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, const std::string& out, bool timing) {
  const auto rows = sciclust::run_bench(sizes, seed);
  emit(out, io::dump(io::bench_json(rows, seed, timing)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shape- and centroid-independent radius-graph clustering"};
  app.require_subcommand(1);

  std::string input, out, svg, events_out, svg_dir, project, kind, spec;
  double radius = 0.0;
  std::optional<double> gen_radius;
  std::optional<std::uint64_t> gen_seed;
  std::uint64_t bench_seed = 1;
  std::vector<std::size_t> bench_n;
  bool timing = false;

  auto* cluster = app.add_subcommand("cluster", "Cluster a point CSV");
  cluster->add_option("--input", input, "Point CSV (id,x,y[,...])")->required();
  cluster->add_option("--radius", radius, "Neighbor radius r")->required();
  cluster->add_option("--out", out, "Labels JSON (default stdout)");
  cluster->add_option("--svg", svg, "Optional scatter plot");

  auto* generate = app.add_subcommand("generate", "Write a synthetic scenario as CSV");
  generate->add_option("--kind", kind, "Scenario kind, or 'motorcade' for a trajectory CSV");
  generate->add_option("--spec", spec, "Scenario parameters as inline JSON or a JSON file");
  generate->add_option("--seed", gen_seed, "Seed for stochastic kinds");
  generate->add_option("--radius", gen_radius, "Clustering radius the layout is scaled to");
  generate->add_option("--out", out, "Output CSV (default stdout)");
  generate->add_option("--svg", svg, "Optional scatter plot, clustered at the scenario radius");

  auto* trajectory = app.add_subcommand("trajectory", "Cluster every frame of a trajectory CSV");
  trajectory->add_option("--input", input, "Trajectory CSV (t,id,x,y[,...])")->required();
  trajectory->add_option("--radius", radius, "Neighbor radius r")->required();
  trajectory->add_option("--out", out, "Frames JSON (default stdout)");
  trajectory->add_option("--events", events_out, "Split/merge events JSON");
  trajectory->add_option("--svg-dir", svg_dir, "Directory for per-frame scatter plots");
  trajectory->add_option("--project", project, "Coordinate projection for lon,lat input")
      ->check(CLI::IsMember({"equirect"}));

  auto* bench = app.add_subcommand("bench", "Compare matrix-power multiplication counts");
  bench->add_option("--bench-n", bench_n, "Comma-separated node counts")->required()->delimiter(',');
  bench->add_option("--seed", bench_seed, "Seed for the random adjacency matrices");
  bench->add_option("--out", out, "Bench JSON (default stdout)");
  bench->add_flag("--timing", timing, "Include wall-clock milliseconds (makes output non-reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "sciclust: error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (cluster->parsed()) return run_cluster(input, radius, out, svg);
    if (generate->parsed()) return run_generate(kind, spec, gen_seed, gen_radius, out, svg);
    if (trajectory->parsed()) return run_trajectory(input, radius, out, events_out, svg_dir, project);
    if (bench->parsed()) return run_bench(bench_n, bench_seed, out, timing);
  } catch (const sciclust::InputError& e) {
    std::cerr << "sciclust: error: " << e.what() << "\n";
    return 1;
  } catch (const sciclust::InvariantError& e) {
    std::cerr << "sciclust: internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "sciclust: internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
