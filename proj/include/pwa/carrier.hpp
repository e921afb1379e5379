#pragma once

#include <vector>

namespace pwa {

// Logistic-map carrier settings. lambda in [0, 4] keeps iterates inside
// [0, 1]; x0 in [0, 1]; niter >= 1.
struct CarrierConfig {
  double lambda = 3.5;
  double x0 = 0.5;
  int niter = 64;
};

// Full orbit: xs holds x_0..x_niter, radii holds 10 * xs elementwise.
struct CarrierSequence {
  std::vector<double> xs;
  std::vector<double> radii;
};

enum class RegimeKind { Periodic, Chaotic, NotConverged };

// Regime classification. cycle holds one period in temporal order with
// pairwise-distinct values (distance > detection tolerance); lyapunov is the
// mean of ln|lambda * (1 - 2x)| over the post-transient window, a diagnostic
// carried for every kind.
struct PeriodResult {
  RegimeKind kind = RegimeKind::NotConverged;
  int period = 0;
  std::vector<double> cycle;
  double lyapunov = 0.0;
};

// One update x -> lambda * x * (1 - x). Throws std::domain_error when
// x is outside [0, 1] or lambda outside [0, 4]. Result lies in [0, lambda/4].
double logistic_step(double x, double lambda);

// Iterates the carrier niter times from x0. Throws std::domain_error on an
// invalid config.
CarrierSequence iterate_carrier(const CarrierConfig& config);

// Mean of ln|lambda * (1 - 2x)| over `count` iterates after discarding
// `transient`; |1 - 2x| is floored at 1e-300 before the log.
double lyapunov_estimate(double lambda, double x0, int transient, int count);

// Discards `transient` iterates, then looks for the smallest period
// p <= max_period whose |x_{n+p} - x_n| < tol holds on 2p consecutive checks
// anywhere in a fixed post-transient window (at least 2048 iterates). When no
// period matches, a positive Lyapunov estimate means Chaotic, otherwise
// NotConverged.
PeriodResult detect_period(double lambda, double x0, int transient = 1000,
                           int max_period = 64, double tol = 1e-9);

// One grid entry of a bifurcation sweep. samples holds the last 256
// post-transient iterates, for plotting the attractor.
struct ScanRow {
  double lambda = 0.0;
  PeriodResult result;
  std::vector<double> samples;
};

// Evaluates detect_period over an evenly spaced lambda grid (inclusive ends;
// lambda_min == lambda_max gives a constant grid). Requires
// 0 <= lambda_min <= lambda_max <= 4 and steps >= 2. Grid points run in
// parallel; rows come back in grid order.
std::vector<ScanRow> bifurcation_scan(double lambda_min, double lambda_max,
                                      int steps, double x0 = 0.5,
                                      int transient = 1000, int max_period = 64,
                                      double tol = 1e-9);

}  // namespace pwa
