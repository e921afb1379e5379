#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include <doctest.h>

#include "pwa/carrier.hpp"
#include "pwa/errors.hpp"
#include "pwa/io.hpp"
#include "pwa/piecewise.hpp"

using namespace pwa;

namespace {

Trajectory sample_trajectory() {
  Trajectory traj;
  traj.meta.source = "test";
  traj.meta.params = {{"alpha", 1.5}, {"beta", -2.0}};
  traj.points = {{0.0, -5.028478044964773, 0.0, 5.589484508023728e-4},
                 {1.0, std::numbers::pi, -8.75, 1234.56789012},
                 {2.0, 0.3333333333333333, 1e-12, -0.0}};
  return traj;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (const char ch : text)
    if (ch == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("format_double prints 12 significant digits and no negative zero") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(format_double(-8.75) == "-8.75");
  CHECK(format_double(1e300) == "1e+300");
}

TEST_CASE("kind_name uses lower snake case") {
  CHECK(kind_name(RegimeKind::Periodic) == "periodic");
  CHECK(kind_name(RegimeKind::Chaotic) == "chaotic");
  CHECK(kind_name(RegimeKind::NotConverged) == "not_converged");
}

TEST_CASE("trajectory_csv emits a header row even when empty") {
  CHECK(trajectory_csv(Trajectory{}) == "t,x,y,z\n");
  const std::string text = trajectory_csv(sample_trajectory());
  CHECK(text.substr(0, 8) == "t,x,y,z\n");
  CHECK(count_lines(text) == 4);
  CHECK(text.back() == '\n');
  CHECK(text.find("\r") == std::string::npos);
  CHECK(text == trajectory_csv(sample_trajectory()));  // byte-stable
}

TEST_CASE("trajectory CSV round trip stays within 1e-9") {
  const auto original = sample_trajectory();
  const auto parsed = parse_trajectory_csv(trajectory_csv(original));
  REQUIRE(parsed.points.size() == original.points.size());
  for (std::size_t i = 0; i < parsed.points.size(); ++i) {
    const auto& a = original.points[i];
    const auto& b = parsed.points[i];
    CHECK(std::abs(a.t - b.t) <= 1e-9 * std::max(1.0, std::abs(a.t)));
    CHECK(std::abs(a.x - b.x) <= 1e-9 * std::max(1.0, std::abs(a.x)));
    CHECK(std::abs(a.y - b.y) <= 1e-9 * std::max(1.0, std::abs(a.y)));
    CHECK(std::abs(a.z - b.z) <= 1e-9 * std::max(1.0, std::abs(a.z)));
  }
}

TEST_CASE("parse_trajectory_csv rejects malformed input") {
  CHECK_THROWS_AS(parse_trajectory_csv(""), IoError);
  CHECK_THROWS_AS(parse_trajectory_csv("a,b,c\n"), IoError);
  CHECK_THROWS_AS(parse_trajectory_csv("t,x,y,z\n1,2,3\n"), IoError);
  CHECK_THROWS_AS(parse_trajectory_csv("t,x,y,z\n1,2,3,4,5\n"), IoError);
  CHECK_THROWS_AS(parse_trajectory_csv("t,x,y,z\n1,2,three,4\n"), IoError);
  CHECK_THROWS_AS(parse_trajectory_csv("t,x,y,z\n1,2,3.5x,4\n"), IoError);
  const auto crlf = parse_trajectory_csv("t,x,y,z\r\n1,2,3,4\r\n");
  REQUIRE(crlf.points.size() == 1);
  CHECK(crlf.points[0].z == 4.0);
}

TEST_CASE("tabular builders share the same shape") {
  CarrierSequence seq;
  seq.xs = {0.5, 0.875};
  seq.radii = {5.0, 8.75};
  CHECK(carrier_csv(seq) == "i,x,r\n0,0.5,5\n1,0.875,8.75\n");

  ScanRow row;
  row.lambda = 3.3;
  row.result.kind = RegimeKind::Periodic;
  row.result.period = 2;
  row.result.lyapunov = -0.5;
  CHECK(bifurcation_csv({row}) ==
        "lambda,period,kind,lyapunov\n3.3,2,periodic,-0.5\n");

  CHECK(return_map_csv({{1.5, 2.5}}) == "xmax_n,xmax_next\n1.5,2.5\n");
  CHECK(maxima_csv({{12.5, 8.1}}) == "t,xmax\n12.5,8.1\n");
}

TEST_CASE("trajectory_json keeps meta and arrays in stable order") {
  const auto doc = trajectory_json(sample_trajectory());
  CHECK(doc["meta"]["source"] == "test");
  CHECK(doc["meta"]["params"]["alpha"] == 1.5);
  REQUIRE(doc["points"]["x"].size() == 3);
  CHECK(doc["points"]["z"][2] == 0.0);
  const std::string dumped = doc.dump();
  CHECK(dumped.find("\"meta\"") < dumped.find("\"points\""));
  CHECK(dumped.find("\"alpha\"") < dumped.find("\"beta\""));
  CHECK(dumped.find("\"t\"") < dumped.find("\"x\""));
}

TEST_CASE("period_result_json spells out the regime") {
  PeriodResult result;
  result.kind = RegimeKind::Periodic;
  result.period = 2;
  result.cycle = {0.8, 0.4};
  result.lyapunov = -0.7;
  const auto doc = period_result_json(result);
  CHECK(doc["kind"] == "periodic");
  CHECK(doc["period"] == 2);
  CHECK(doc["cycle"].size() == 2);
  CHECK(doc["lyapunov"] == -0.7);
}

TEST_CASE("projection_svg draws one scaled polyline per trajectory") {
  Trajectory traj;
  traj.points = {{0.0, 0.0, 0.0, 0.0}, {1.0, 1.0, 2.0, 0.5},
                 {2.0, -1.0, 1.0, 1.0}};
  const std::string svg = projection_svg(traj, Plane::XY);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("width=\"800\"") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("<polyline", svg.find("<polyline") + 1) == std::string::npos);

  const auto start = svg.find("points=\"") + 8;
  const auto stop = svg.find('"', start);
  const std::string points = svg.substr(start, stop - start);
  CHECK(std::count(points.begin(), points.end(), ',') == 3);
  CHECK(std::count(points.begin(), points.end(), ' ') == 2);

  CHECK_THROWS_AS(projection_svg(Trajectory{}, Plane::XY),
                  InsufficientDataError);
}

TEST_CASE("projection planes pick the right coordinates") {
  Trajectory traj;
  traj.points = {{0.0, 1.0, 2.0, 30.0}, {1.0, 4.0, 5.0, 6.0},
                 {2.0, 7.0, 0.0, 9.0}};
  const std::string xy = projection_svg(traj, Plane::XY);
  const std::string xz = projection_svg(traj, Plane::XZ);
  const std::string yz = projection_svg(traj, Plane::YZ);
  CHECK(xy != xz);
  CHECK(xz != yz);
}

TEST_CASE("file helpers round trip bytes and surface path errors") {
  const auto path = temp_file("pwa_io_roundtrip.csv");
  const auto traj = sample_trajectory();
  write_trajectory_csv(traj, path);
  const auto back = read_trajectory_csv(path);
  REQUIRE(back.points.size() == traj.points.size());
  CHECK(back.points[1].y == -8.75);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(read_text_file("/nonexistent_dir_pwa/x.csv"), IoError);
  CHECK_THROWS_AS(write_text_file("/nonexistent_dir_pwa/x.csv", "hi"), IoError);
}

TEST_CASE("svg writer produces a file starting with an svg root") {
  const auto path = temp_file("pwa_io_proj.svg");
  const auto seq = iterate_carrier({3.5, 0.5, 8});
  write_projection_svg(assemble_trajectory(seq.radii), Plane::XY, path);
  const auto text = read_text_file(path);
  CHECK(text.rfind("<svg", 0) == 0);
  std::filesystem::remove(path);
}
