#pragma once

#include <string>
#include <vector>

#include "pwa/carrier.hpp"
#include "pwa/piecewise.hpp"
#include "pwa/rossler.hpp"

#include <json.hpp>

namespace pwa {

// Inputs of a carrier-vs-flow comparison for a (lambda, c) pair.
struct CompareInputs {
  double lambda = 3.5;
  double x0 = 0.5;
  int transient = 1000;    // carrier detection burn-in, iterations
  int max_period = 64;
  double tol = 1e-9;
  RosslerParams rossler{};
  ShapeParams shape{};
  double cluster_tol = 0.05;
  int niter = 64;          // synthesis length for non-periodic carriers
};

struct ComparisonReport {
  PeriodResult carrier_period;
  int rossler_period = 0;  // maxima cluster count
  std::vector<double> cluster_centers;
  std::string rank_match;  // "equivalent" | "not_equivalent" | "not_applicable"
  std::vector<int> carrier_pattern;  // empty when not applicable
  std::vector<int> rossler_pattern;
  double min_separation = 0.0;  // over one closed synthesized cycle
  std::size_t min_separation_i = 0;
  std::size_t min_separation_j = 0;
  double junction_gap_max = 0.0;
};

// Runs carrier detection, flow integration, maxima clustering, rank-pattern
// comparison (cycle vs first `period` post-transient maxima, both rotated to
// start at their maximum), and the closed-cycle separation and junction-gap
// checks. Non-periodic carriers synthesize from the full niter orbit and
// report rank_match = "not_applicable", as do rank ties.
ComparisonReport build_comparison(const CompareInputs& inputs);

nlohmann::ordered_json comparison_json(const ComparisonReport& report);

}  // namespace pwa
