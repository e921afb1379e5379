#include "pwa/piecewise.hpp"

#include <cmath>
#include <stdexcept>

namespace pwa {

namespace {

void check_params(const ShapeParams& p) {
  if (!(p.m4 > 0.0)) throw std::domain_error("m4 must be > 0");
  if (!(p.gauss_a > 0.0)) throw std::domain_error("gauss_a must be > 0");
  if (!(p.c3 > 0.0)) throw std::domain_error("c3 must be > 0");
  if (p.npoints < 2) throw std::domain_error("npoints must be >= 2");
}

void check_tau(double tau) {
  if (!(tau >= 0.0 && tau < 1.0))
    throw std::domain_error("tau must lie in [0, 1)");
}

void check_radius(double r) {
  if (!(r >= 0.0)) throw std::domain_error("radii must be >= 0");
}

// Formula evaluation without the tau domain check; junction gaps evaluate
// the closed form at tau = 1 exactly.
double radius_value(double r_i, double r_next, double tau,
                    const ShapeParams& p) {
  const double m2 = r_next - r_i;
  const double sig = 1.0 / (1.0 + std::exp(-(tau - p.m3) / p.m4));
  const double u = p.gauss_a * (tau - p.m6);
  const double w = p.gauss_a * (tau - p.m8);
  return r_i + m2 * sig - p.m5 * u * std::exp(-0.5 * u * u) +
         p.m7 * std::exp(-0.5 * w * w);
}

double elevation_value(double r_i, double tau, const ShapeParams& p) {
  const double base =
      (r_i / 10.0) * std::exp(-std::cos(2.0 * std::numbers::pi * tau - p.phase));
  const double sq = base * base;
  return p.c3 * sq * sq;
}

}  // namespace

double radius_profile(double r_i, double r_next, double tau,
                      const ShapeParams& params) {
  check_params(params);
  check_radius(r_i);
  check_radius(r_next);
  check_tau(tau);
  return radius_value(r_i, r_next, tau, params);
}

double radius_profile_slope(double r_i, double r_next, double tau,
                            const ShapeParams& params) {
  check_params(params);
  check_radius(r_i);
  check_radius(r_next);
  check_tau(tau);
  const double m2 = r_next - r_i;
  const double sig = 1.0 / (1.0 + std::exp(-(tau - params.m3) / params.m4));
  const double dsig = sig * (1.0 - sig) / params.m4;
  const double u = params.gauss_a * (tau - params.m6);
  const double w = params.gauss_a * (tau - params.m8);
  const double ddip =
      params.m5 * params.gauss_a * (1.0 - u * u) * std::exp(-0.5 * u * u);
  const double dbump =
      params.m7 * params.gauss_a * w * std::exp(-0.5 * w * w);
  return m2 * dsig - ddip - dbump;
}

double elevation_profile(double r_i, double tau, const ShapeParams& params) {
  check_params(params);
  check_radius(r_i);
  check_tau(tau);
  return elevation_value(r_i, tau, params);
}

Trajectory assemble_trajectory(std::span<const double> radii,
                               const ShapeParams& params) {
  check_params(params);
  if (radii.size() < 2)
    throw std::domain_error("assemble_trajectory needs at least two radii");
  for (const double r : radii) check_radius(r);

  Trajectory out;
  out.meta.source = "synthesized";
  out.meta.params = {
      {"pieces", static_cast<double>(radii.size() - 1)},
      {"npoints", static_cast<double>(params.npoints)},
      {"m3", params.m3},         {"m4", params.m4},
      {"m5", params.m5},         {"m6", params.m6},
      {"m7", params.m7},         {"m8", params.m8},
      {"gauss_a", params.gauss_a}, {"c3", params.c3},
      {"phase", params.phase},
  };

  const std::size_t pieces = radii.size() - 1;
  const std::size_t npoints = static_cast<std::size_t>(params.npoints);
  out.points.reserve(pieces * npoints);
  std::size_t index = 0;
  for (std::size_t i = 0; i < pieces; ++i) {
    for (std::size_t k = 0; k < npoints; ++k) {
      const double tau =
          static_cast<double>(k) / static_cast<double>(params.npoints);
      const double radius = radius_value(radii[i], radii[i + 1], tau, params);
      const double z = elevation_value(radii[i], tau, params);
      const double angle = 2.0 * std::numbers::pi * tau;
      out.points.push_back({static_cast<double>(index),
                            -radius * std::cos(angle),
                            -radius * std::sin(angle), z});
      ++index;
    }
  }
  return out;
}

std::vector<double> piece_junction_gap(std::span<const double> radii,
                                       const ShapeParams& params) {
  check_params(params);
  if (radii.size() < 3)
    throw std::domain_error("piece_junction_gap needs at least three radii");
  for (const double r : radii) check_radius(r);

  std::vector<double> gaps;
  gaps.reserve(radii.size() - 2);
  for (std::size_t i = 0; i + 2 < radii.size(); ++i) {
    const double end_i = radius_value(radii[i], radii[i + 1], 1.0, params);
    const double start_next = radius_value(radii[i + 1], radii[i + 2], 0.0, params);
    gaps.push_back(std::abs(end_i - start_next));
  }
  return gaps;
}

}  // namespace pwa
