#include "pwa/carrier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pwa/parallel.hpp"

namespace pwa {

namespace {

constexpr int kWindowFloor = 2048;
constexpr int kSampleCount = 256;
constexpr double kLogFloor = 1e-300;

void check_domain(double lambda, double x0) {
  if (!(lambda >= 0.0 && lambda <= 4.0))
    throw std::domain_error("lambda must lie in [0, 4]");
  if (!(x0 >= 0.0 && x0 <= 1.0))
    throw std::domain_error("x0 must lie in [0, 1]");
}

inline double step_unchecked(double x, double lambda) {
  return lambda * x * (1.0 - x);
}

// Post-transient window x_transient .. x_transient+count-1.
std::vector<double> window_after(double lambda, double x0, int transient,
                                 int count) {
  double x = x0;
  for (int i = 0; i < transient; ++i) x = step_unchecked(x, lambda);
  std::vector<double> xs(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    xs[static_cast<std::size_t>(i)] = x;
    x = step_unchecked(x, lambda);
  }
  return xs;
}

double lyapunov_over(const std::vector<double>& xs, double lambda) {
  double sum = 0.0;
  for (double x : xs) {
    const double d = std::max(std::abs(lambda * (1.0 - 2.0 * x)), kLogFloor);
    sum += std::log(d);
  }
  return sum / static_cast<double>(xs.size());
}

bool pairwise_distinct(const std::vector<double>& cycle, double tol) {
  for (std::size_t i = 0; i < cycle.size(); ++i)
    for (std::size_t j = i + 1; j < cycle.size(); ++j)
      if (std::abs(cycle[i] - cycle[j]) <= tol) return false;
  return true;
}

}  // namespace

double logistic_step(double x, double lambda) {
  check_domain(lambda, x);
  return step_unchecked(x, lambda);
}

CarrierSequence iterate_carrier(const CarrierConfig& config) {
  check_domain(config.lambda, config.x0);
  if (config.niter < 1) throw std::domain_error("niter must be >= 1");
  CarrierSequence seq;
  const std::size_t len = static_cast<std::size_t>(config.niter) + 1;
  seq.xs.reserve(len);
  seq.radii.reserve(len);
  double x = config.x0;
  seq.xs.push_back(x);
  seq.radii.push_back(10.0 * x);
  for (int i = 0; i < config.niter; ++i) {
    x = step_unchecked(x, config.lambda);
    seq.xs.push_back(x);
    seq.radii.push_back(10.0 * x);
  }
  return seq;
}

double lyapunov_estimate(double lambda, double x0, int transient, int count) {
  check_domain(lambda, x0);
  if (transient < 0) throw std::domain_error("transient must be >= 0");
  if (count < 1) throw std::domain_error("count must be >= 1");
  return lyapunov_over(window_after(lambda, x0, transient, count), lambda);
}

PeriodResult detect_period(double lambda, double x0, int transient,
                           int max_period, double tol) {
  check_domain(lambda, x0);
  if (transient < 0) throw std::domain_error("transient must be >= 0");
  if (max_period < 1) throw std::domain_error("max_period must be >= 1");
  if (!(tol > 0.0)) throw std::domain_error("tol must be > 0");

  const int window = std::max(kWindowFloor, 4 * max_period);
  const std::vector<double> xs = window_after(lambda, x0, transient, window);

  PeriodResult out;
  out.lyapunov = lyapunov_over(xs, lambda);

  for (int p = 1; p <= max_period; ++p) {
    int run = 0;
    for (int n = 0; n + p < window; ++n) {
      if (std::abs(xs[static_cast<std::size_t>(n + p)] -
                   xs[static_cast<std::size_t>(n)]) < tol) {
        ++run;
        if (run >= 2 * p) {
          // Checks n-2p+1..n all passed; take the cycle from the end of the
          // run, where convergence onto the cycle is deepest.
          const auto first = xs.begin() + (n + 2 - p);
          std::vector<double> cycle(first, first + p);
          if (p == 1 || pairwise_distinct(cycle, tol)) {
            out.kind = RegimeKind::Periodic;
            out.period = p;
            out.cycle = std::move(cycle);
            return out;
          }
          break;  // degenerate cycle at this p; try a longer period
        }
      } else {
        run = 0;
      }
    }
  }

  out.kind = out.lyapunov > 0.0 ? RegimeKind::Chaotic : RegimeKind::NotConverged;
  return out;
}

std::vector<ScanRow> bifurcation_scan(double lambda_min, double lambda_max,
                                      int steps, double x0, int transient,
                                      int max_period, double tol) {
  if (!(lambda_min >= 0.0 && lambda_min <= lambda_max && lambda_max <= 4.0))
    throw std::domain_error("need 0 <= lambda_min <= lambda_max <= 4");
  if (steps < 2) throw std::domain_error("steps must be >= 2");
  check_domain(lambda_min, x0);
  if (transient < 0) throw std::domain_error("transient must be >= 0");
  if (max_period < 1) throw std::domain_error("max_period must be >= 1");
  if (!(tol > 0.0)) throw std::domain_error("tol must be > 0");

  const int window = std::max(kWindowFloor, 4 * max_period);
  const double span = lambda_max - lambda_min;
  std::vector<ScanRow> rows(static_cast<std::size_t>(steps));
  parallel_for(static_cast<std::size_t>(steps), [&](std::size_t i) {
    const double lambda =
        lambda_min + span * static_cast<double>(i) / static_cast<double>(steps - 1);
    ScanRow& row = rows[i];
    row.lambda = lambda;
    row.result = detect_period(lambda, x0, transient, max_period, tol);
    const int keep = std::min(kSampleCount, window);
    row.samples = window_after(lambda, x0, transient + window - keep, keep);
  });
  return rows;
}

}  // namespace pwa
