#include "pwa/rossler.hpp"

#include <cmath>
#include <stdexcept>

#include "pwa/errors.hpp"

namespace pwa {

namespace {

constexpr double kBlowupGuard = 1e6;

void check_params(const RosslerParams& p) {
  if (!(p.dt > 0.0)) throw std::domain_error("dt must be > 0");
  if (!(p.t_end > 0.0)) throw std::domain_error("t_end must be > 0");
  if (!(p.transient >= 0.0 && p.transient < p.t_end))
    throw std::domain_error("transient must lie in [0, t_end)");
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c))
    throw std::domain_error("a, b, c must be finite");
}

Vec3 rk4_step(const Vec3& s, const RosslerParams& p) {
  const double h = p.dt;
  const auto shifted = [](const Vec3& base, double f, const Vec3& k) {
    return Vec3{base.x + f * k.x, base.y + f * k.y, base.z + f * k.z};
  };
  const Vec3 k1 = rossler_derivative(s, p);
  const Vec3 k2 = rossler_derivative(shifted(s, 0.5 * h, k1), p);
  const Vec3 k3 = rossler_derivative(shifted(s, 0.5 * h, k2), p);
  const Vec3 k4 = rossler_derivative(shifted(s, h, k3), p);
  return {s.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
          s.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
          s.z + h / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z)};
}

}  // namespace

Vec3 rossler_derivative(const Vec3& state, const RosslerParams& params) {
  return {-state.y - state.z, state.x + params.a * state.y,
          params.b + state.x * state.z - params.c * state.z};
}

Trajectory integrate(const RosslerParams& params) {
  check_params(params);

  Trajectory out;
  out.meta.source = "integrated";
  out.meta.params = {
      {"a", params.a},
      {"b", params.b},
      {"c", params.c},
      {"dt", params.dt},
      {"t_end", params.t_end},
      {"transient", params.transient},
      {"x0", params.initial_state.x},
      {"y0", params.initial_state.y},
      {"z0", params.initial_state.z},
  };

  const auto steps = static_cast<std::size_t>(std::llround(params.t_end / params.dt));
  out.points.reserve(steps + 1);
  Vec3 s = params.initial_state;
  out.points.push_back({0.0, s.x, s.y, s.z});
  for (std::size_t i = 1; i <= steps; ++i) {
    s = rk4_step(s, params);
    if (std::abs(s.x) > kBlowupGuard || std::abs(s.y) > kBlowupGuard ||
        std::abs(s.z) > kBlowupGuard || !std::isfinite(s.x) ||
        !std::isfinite(s.y) || !std::isfinite(s.z)) {
      throw DivergenceError("trajectory diverged at t = " +
                            std::to_string(static_cast<double>(i) * params.dt));
    }
    out.points.push_back(
        {static_cast<double>(i) * params.dt, s.x, s.y, s.z});
  }
  return out;
}

std::vector<Maximum> extract_x_maxima(const Trajectory& traj, double transient) {
  std::vector<Maximum> out;
  const auto& pts = traj.points;
  if (pts.size() < 3) return out;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (!(pts[i].t > transient)) continue;
    const double left = pts[i - 1].x;
    const double mid = pts[i].x;
    const double right = pts[i + 1].x;
    if (!(left < mid && mid >= right)) continue;

    // Parabola through the three samples; flat tops fall back to the center.
    const double denom = left - 2.0 * mid + right;
    double delta = 0.0;
    double value = mid;
    if (denom != 0.0) {
      delta = 0.5 * (left - right) / denom;
      const double lin = 0.5 * (right - left);
      const double quad = 0.5 * (left + right) - mid;
      value = mid - lin * lin / (4.0 * quad);
    }
    const double dt = pts[i].t - pts[i - 1].t;
    out.push_back({pts[i].t + delta * dt, value});
  }
  return out;
}

std::vector<std::pair<double, double>> first_return_map(
    const std::vector<Maximum>& maxima) {
  if (maxima.size() < 2)
    throw InsufficientDataError("first_return_map needs at least two maxima");
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(maxima.size() - 1);
  for (std::size_t i = 0; i + 1 < maxima.size(); ++i)
    pairs.emplace_back(maxima[i].value, maxima[i + 1].value);
  return pairs;
}

}  // namespace pwa
