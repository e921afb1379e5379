#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "pwa/carrier.hpp"
#include "pwa/piecewise.hpp"

using namespace pwa;

TEST_CASE("radius_profile reproduces frozen reference values") {
  CHECK(radius_profile(5.0, 8.75, 0.0) ==
        doctest::Approx(5.028478044964773).epsilon(1e-12));
  CHECK(radius_profile(5.0, 8.75, 0.125) ==
        doctest::Approx(5.325032508764255).epsilon(1e-12));
  CHECK(radius_profile(5.0, 5.0, 0.0) ==
        doctest::Approx(5.028307802957139).epsilon(1e-12));
}

TEST_CASE("radius_profile with equal radii ignores the sigmoid entirely") {
  ShapeParams narrow;
  narrow.m4 = 0.05;
  ShapeParams wide;
  wide.m4 = 0.2;
  wide.m3 = 0.9;
  for (const double tau : {0.0, 0.3, 0.6, 0.99})
    CHECK(radius_profile(5.0, 5.0, tau, narrow) ==
          radius_profile(5.0, 5.0, tau, wide));
}

TEST_CASE("radius_profile validates tau, radii and params") {
  CHECK_THROWS_AS(radius_profile(5.0, 8.75, 1.0), std::domain_error);
  CHECK_THROWS_AS(radius_profile(5.0, 8.75, -0.1), std::domain_error);
  CHECK_THROWS_AS(radius_profile(-1.0, 8.75, 0.5), std::domain_error);
  CHECK_THROWS_AS(radius_profile(5.0, -0.5, 0.5), std::domain_error);
  CHECK_NOTHROW(radius_profile(12.0, 3.0, 0.5));  // no upper radius bound

  ShapeParams bad;
  bad.m4 = 0.0;
  CHECK_THROWS_AS(radius_profile(5.0, 8.75, 0.5, bad), std::domain_error);
  bad = ShapeParams{};
  bad.gauss_a = -1.0;
  CHECK_THROWS_AS(radius_profile(5.0, 8.75, 0.5, bad), std::domain_error);
  bad = ShapeParams{};
  bad.c3 = 0.0;
  CHECK_THROWS_AS(elevation_profile(5.0, 0.5, bad), std::domain_error);
  bad = ShapeParams{};
  bad.npoints = 1;
  const std::vector<double> radii{5.0, 8.75};
  CHECK_THROWS_AS(assemble_trajectory(radii, bad), std::domain_error);
}

TEST_CASE("radius_profile_slope matches finite differences") {
  CHECK(radius_profile_slope(5.0, 8.75, 0.0) ==
        doctest::Approx(0.6470543656951541).epsilon(1e-12));
  // The launch slope stays below 1 radius unit per revolution.
  CHECK(std::abs(radius_profile_slope(5.0, 8.75, 0.0)) < 1.0);

  const double h = 1e-6;
  const struct {
    double r_i, r_next, tau;
  } cases[] = {{5.0, 8.75, 0.0},  {5.0, 8.75, 0.5}, {5.0, 5.0, 0.3},
               {2.0, 9.0, 0.7},   {8.75, 3.828, 0.55}, {0.0, 4.0, 0.25}};
  for (const auto& c : cases) {
    const double fd = (radius_profile(c.r_i, c.r_next, c.tau + h) -
                       radius_profile(c.r_i, c.r_next, c.tau)) / h;
    CHECK(radius_profile_slope(c.r_i, c.r_next, c.tau + 0.5 * h) ==
          doctest::Approx(fd).epsilon(1e-4));
  }
}

TEST_CASE("elevation_profile reproduces frozen values and vanishes at zero radius") {
  CHECK(elevation_profile(5.0, 0.0) ==
        doctest::Approx(0.0005589484508023728).epsilon(1e-12));
  CHECK(elevation_profile(5.0, 0.025) ==
        doctest::Approx(0.00042659588554947006).epsilon(1e-12));
  for (const double tau : {0.0, 0.25, 0.5, 0.75})
    CHECK(elevation_profile(0.0, tau) == 0.0);

  double max_z = 0.0;
  for (int k = 0; k < 80; ++k) {
    const double z = elevation_profile(8.75, k / 80.0);
    CHECK(z >= 0.0);
    max_z = std::max(max_z, z);
  }
  CHECK(max_z == doctest::Approx(9.13159849525353).epsilon(1e-9));
}

TEST_CASE("assemble_trajectory chains pieces with a running sample index") {
  const auto seq = iterate_carrier({3.5, 0.5, 64});
  REQUIRE(seq.radii.size() == 65);
  const auto traj = assemble_trajectory(seq.radii);
  REQUIRE(traj.points.size() == 5120);
  CHECK(traj.meta.source == "synthesized");

  for (std::size_t i = 0; i < traj.points.size(); ++i)
    CHECK(traj.points[i].t == static_cast<double>(i));

  const auto& p0 = traj.points[0];
  CHECK(p0.x == doctest::Approx(-5.028478044964773).epsilon(1e-9));
  CHECK(std::abs(p0.y) == 0.0);
  CHECK(p0.z == doctest::Approx(0.0005589484508023728).epsilon(1e-9));

  const auto& p1 = traj.points[1];
  CHECK(p1.x == doctest::Approx(-5.02215040).epsilon(1e-6));
  CHECK(p1.y == doctest::Approx(-0.39525181).epsilon(1e-6));
  CHECK(p1.z == doctest::Approx(4.82903929e-4).epsilon(1e-6));

  const auto& p2 = traj.points[2];
  CHECK(p2.x == doctest::Approx(-4.98728775).epsilon(1e-6));
  CHECK(p2.y == doctest::Approx(-0.78990878).epsilon(1e-6));
  CHECK(p2.z == doctest::Approx(4.26595886e-4).epsilon(1e-6));

  const auto& p10 = traj.points[10];
  CHECK(p10.x == doctest::Approx(-3.76536660).epsilon(1e-6));
  CHECK(p10.y == doctest::Approx(-3.76536660).epsilon(1e-6));
  CHECK(std::abs(p10.x - p10.y) < 1e-9);  // tau = 1/8: cos equals sin
  CHECK(p10.z == doctest::Approx(3.74823618e-4).epsilon(1e-6));

  // The xy footprint of the reference run is nearly square.
  double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
  for (const auto& p : traj.points) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double aspect = (xmax - xmin) / (ymax - ymin);
  CHECK(aspect > 0.8);
  CHECK(aspect < 1.25);
}

TEST_CASE("assemble_trajectory of zero radii stays z-flat and window-bounded") {
  const std::vector<double> radii{0.0, 0.0};
  const auto traj = assemble_trajectory(radii);
  REQUIRE(traj.points.size() == 80);
  for (const auto& p : traj.points) {
    CHECK(std::abs(p.x) <= 3.5 + 2.5);
    CHECK(std::abs(p.y) <= 3.5 + 2.5);
    CHECK(p.z == 0.0);
  }
}

TEST_CASE("assemble_trajectory needs at least one piece") {
  const std::vector<double> one{5.0};
  CHECK_THROWS_AS(assemble_trajectory(one), std::domain_error);
  const std::vector<double> negative{5.0, -1.0};
  CHECK_THROWS_AS(assemble_trajectory(negative), std::domain_error);
}

TEST_CASE("piece_junction_gap evaluates the junction instant directly") {
  const std::vector<double> flat{5.0, 5.0, 5.0};
  const auto flat_gaps = piece_junction_gap(flat);
  REQUIRE(flat_gaps.size() == 1);
  CHECK(flat_gaps[0] == doctest::Approx(0.0375941512814737).epsilon(1e-12));

  // The residual mismatch is the fixed window overhang, independent of r.
  const std::vector<double> low{2.0, 2.0, 2.0};
  CHECK(piece_junction_gap(low)[0] ==
        doctest::Approx(0.0375941512814737).epsilon(1e-9));

  const auto seq = iterate_carrier({3.5, 0.5, 64});
  const auto gaps = piece_junction_gap(seq.radii);
  REQUIRE(gaps.size() == 63);
  double lo = 1e9, hi = -1e9;
  for (const double g : gaps) {
    lo = std::min(lo, g);
    hi = std::max(hi, g);
    CHECK(g < 0.15);
  }
  CHECK(hi == doctest::Approx(0.03764775944318721).epsilon(1e-9));
  CHECK(lo == doctest::Approx(0.03754054648091554).epsilon(1e-9));
}

TEST_CASE("piece_junction_gap shrinks under a sharper window factor") {
  ShapeParams sharp;
  sharp.gauss_a = 50.0;
  const auto seq = iterate_carrier({3.5, 0.5, 64});
  const auto gaps = piece_junction_gap(seq.radii, sharp);
  double hi = 0.0;
  for (const double g : gaps) hi = std::max(hi, g);
  CHECK(hi == doctest::Approx(5.360816171418037e-5).epsilon(1e-6));
  CHECK(hi < 1e-4);
}

TEST_CASE("piece_junction_gap needs at least three radii") {
  const std::vector<double> two{5.0, 8.75};
  CHECK_THROWS_AS(piece_junction_gap(two), std::domain_error);
}
