#pragma once

#include <numbers>
#include <span>

#include "pwa/trajectory.hpp"

#include <vector>

namespace pwa {

// Shape constants of one synthesized piece. m1 (base radius) and m2 (radius
// step) are derived per piece from the radius pair and are not stored here.
// Defaults reproduce the reference trajectory.
struct ShapeParams {
  double m3 = 0.5;    // sigmoid center, normalized time
  double m4 = 0.05;   // sigmoid width
  double m5 = 3.5;    // dip amplitude, radius units
  double m6 = 0.5;    // dip center, normalized time
  double m7 = 2.5;    // bump amplitude, radius units
  double m8 = 0.55;   // bump center, normalized time
  double gauss_a = 7.0;                 // sharpness of dip and bump
  double c3 = 1.0 / 3.5;                // elevation scale
  double phase = std::numbers::pi / 6;  // elevation phase shift, radians
  int npoints = 80;                     // samples per piece
};

// Radius R(tau) for tau in [0, 1): base radius plus a sigmoid ramp to the
// next radius, a Gaussian-windowed dip and a Gaussian bump. The sharpness
// factor multiplies the argument of both window terms including the dip's
// linear prefactor. Throws std::domain_error on tau outside [0, 1), negative
// radii, or invalid params.
double radius_profile(double r_i, double r_next, double tau,
                      const ShapeParams& params = {});

// Analytic d/dtau of radius_profile, same domain.
double radius_profile_slope(double r_i, double r_next, double tau,
                            const ShapeParams& params = {});

// Elevation Z(tau) = c3 * ((r_i/10) * exp(-cos(2 pi tau - phase)))^4.
// Non-negative; identically zero when r_i == 0.
double elevation_profile(double r_i, double tau, const ShapeParams& params = {});

// Chains one piece per consecutive radius pair: npoints samples each at
// tau = k/npoints (endpoint-exclusive), X = -R cos(2 pi tau),
// Y = -R sin(2 pi tau), Z = elevation. t is the global running sample index;
// total points = (radii count - 1) * npoints. Requires at least two
// non-negative radii.
Trajectory assemble_trajectory(std::span<const double> radii,
                               const ShapeParams& params = {});

// Absolute radius mismatch |R_i(tau=1) - R_{i+1}(0)| at each interior
// junction, with R_i(1) by direct formula evaluation (the junction instant
// itself, not the last grid sample). Requires at least three radii; returns
// radii count - 2 gaps.
std::vector<double> piece_junction_gap(std::span<const double> radii,
                                       const ShapeParams& params = {});

}  // namespace pwa
