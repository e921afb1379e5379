#pragma once

#include <utility>
#include <vector>

#include "pwa/trajectory.hpp"

namespace pwa {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Flow parameters plus integration settings. c is the control parameter that
// drives the period-doubling cascade.
struct RosslerParams {
  double a = 0.2;
  double b = 0.2;
  double c = 5.7;
  double dt = 0.01;
  double t_end = 500.0;
  double transient = 200.0;
  Vec3 initial_state{0.1, 0.1, 0.1};
};

// Right-hand side (-y - z, x + a y, b + x z - c z).
Vec3 rossler_derivative(const Vec3& state, const RosslerParams& params);

// Classical fixed-step fourth-order Runge-Kutta over [0, t_end], one sample
// per step including t = 0. The transient is kept in the output (analysis
// helpers discard it). Throws std::domain_error on invalid settings and
// DivergenceError when any coordinate magnitude exceeds 1e6.
Trajectory integrate(const RosslerParams& params);

struct Maximum {
  double t = 0.0;
  double value = 0.0;
};

// Interior local maxima of x(t) with t > transient (x[i-1] < x[i] >= x[i+1]),
// each refined by the parabola through the three neighbouring samples.
// Returns an empty list when nothing qualifies (too short a run).
std::vector<Maximum> extract_x_maxima(const Trajectory& traj, double transient);

// Successive-maxima pairs (v_k, v_{k+1}), order preserved; length is
// maxima count - 1. Throws InsufficientDataError on fewer than two maxima.
std::vector<std::pair<double, double>> first_return_map(
    const std::vector<Maximum>& maxima);

}  // namespace pwa
