#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pwa/trajectory.hpp"

namespace pwa {

// theta = atan2(y, x) in degrees, normalized to (-180, 180]; r = hypot(x, y).
struct PolarSample {
  double theta = 0.0;
  double r = 0.0;
  double z = 0.0;
};

std::vector<PolarSample> to_polar(const Trajectory& traj);

struct SeparationResult {
  double distance = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;  // i < j
};

// Minimum 3-D distance over sample pairs with exclusion < |i-j| < n-exclusion
// (skips curve-following neighbours on both sides of a closed loop). Requires
// exclusion >= 1; throws InsufficientDataError when no pair qualifies. Ties
// resolve to the smallest (i, j).
SeparationResult min_separation(const Trajectory& traj, std::size_t exclusion);

// ranks[k] = rank of values[k] among the sorted values, 0 = smallest.
// Throws TieError when two values are closer than rel_tol times the value
// span, and InsufficientDataError on empty input.
std::vector<int> rank_order_pattern(std::span<const double> values,
                                    double rel_tol = 1e-6);

// True when rhs (or one of its cyclic rotations) equals lhs. Length mismatch
// means not equivalent.
bool compare_patterns(std::span<const int> lhs, std::span<const int> rhs);

// Cyclic rotation placing the largest value first. Throws TieError on a
// duplicated maximum, InsufficientDataError on empty input.
std::vector<double> rotate_to_maximum(std::span<const double> values);

// Single-linkage grouping: sorted values split wherever a gap exceeds tol.
// Clusters come back in ascending order, each cluster sorted.
std::vector<std::vector<double>> cluster_values(std::span<const double> values,
                                                double tol);

}  // namespace pwa
