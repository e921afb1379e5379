#include "pwa/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "pwa/errors.hpp"
#include "pwa/parallel.hpp"

namespace pwa {

std::vector<PolarSample> to_polar(const Trajectory& traj) {
  std::vector<PolarSample> out;
  out.reserve(traj.points.size());
  for (const auto& p : traj.points) {
    double theta = std::atan2(p.y, p.x) * 180.0 / std::numbers::pi;
    if (theta <= -180.0) theta += 360.0;  // keep (-180, 180]; -0 y maps to 180
    out.push_back({theta, std::hypot(p.x, p.y), p.z});
  }
  return out;
}

SeparationResult min_separation(const Trajectory& traj, std::size_t exclusion) {
  if (exclusion < 1) throw std::domain_error("exclusion must be >= 1");
  const auto& pts = traj.points;
  const std::size_t n = pts.size();
  if (n < 2 * exclusion + 2)
    throw InsufficientDataError(
        "no sample pair admissible under the exclusion window");

  // Per-row best, reduced afterwards: deterministic for any worker count.
  std::vector<SeparationResult> row_best(n, {0.0, 0, 0});
  std::vector<char> row_has(n, 0);
  parallel_for(n, [&](std::size_t i) {
    double best = 0.0;
    std::size_t best_j = 0;
    bool has = false;
    const std::size_t j_end = std::min(n, i + (n - exclusion));
    for (std::size_t j = i + exclusion + 1; j < j_end; ++j) {
      const double dx = pts[i].x - pts[j].x;
      const double dy = pts[i].y - pts[j].y;
      const double dz = pts[i].z - pts[j].z;
      const double d2 = dx * dx + dy * dy + dz * dz;
      if (!has || d2 < best) {
        best = d2;
        best_j = j;
        has = true;
      }
    }
    if (has) {
      row_best[i] = {best, i, best_j};
      row_has[i] = 1;
    }
  });

  bool found = false;
  SeparationResult result{0.0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    if (!row_has[i]) continue;
    if (!found || row_best[i].distance < result.distance) {
      result = row_best[i];
      found = true;
    }
  }
  if (!found)
    throw InsufficientDataError(
        "no sample pair admissible under the exclusion window");
  result.distance = std::sqrt(result.distance);
  return result;
}

std::vector<int> rank_order_pattern(std::span<const double> values,
                                    double rel_tol) {
  if (values.empty())
    throw InsufficientDataError("rank_order_pattern needs at least one value");
  if (values.size() == 1) return {0};

  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double span = *hi - *lo;
  if (span <= 0.0) throw TieError("all values coincide");
  const double threshold = rel_tol * span;

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    if (values[order[k + 1]] - values[order[k]] <= threshold)
      throw TieError("two values are within the distinctness tolerance");
  }

  std::vector<int> ranks(values.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    ranks[order[k]] = static_cast<int>(k);
  return ranks;
}

bool compare_patterns(std::span<const int> lhs, std::span<const int> rhs) {
  if (lhs.size() != rhs.size()) return false;
  const std::size_t n = lhs.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (lhs[k] != rhs[(k + shift) % n]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

std::vector<double> rotate_to_maximum(std::span<const double> values) {
  if (values.empty())
    throw InsufficientDataError("rotate_to_maximum needs at least one value");
  const auto it = std::max_element(values.begin(), values.end());
  for (auto other = values.begin(); other != values.end(); ++other)
    if (other != it && *other == *it)
      throw TieError("maximum value is duplicated");
  std::vector<double> out;
  out.reserve(values.size());
  out.insert(out.end(), it, values.end());
  out.insert(out.end(), values.begin(), it);
  return out;
}

std::vector<std::vector<double>> cluster_values(std::span<const double> values,
                                                double tol) {
  if (!(tol >= 0.0)) throw std::domain_error("tol must be >= 0");
  std::vector<std::vector<double>> clusters;
  if (values.empty()) return clusters;
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  clusters.push_back({sorted.front()});
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] > tol) clusters.emplace_back();
    clusters.back().push_back(sorted[i]);
  }
  return clusters;
}

}  // namespace pwa
