#include "pwa/report.hpp"

#include <utility>

#include "pwa/analysis.hpp"
#include "pwa/errors.hpp"
#include "pwa/io.hpp"

namespace pwa {

namespace {

constexpr std::size_t kSeparationExclusion = 5;

std::vector<double> cluster_means(
    const std::vector<std::vector<double>>& clusters) {
  std::vector<double> centers;
  centers.reserve(clusters.size());
  for (const auto& cluster : clusters) {
    double sum = 0.0;
    for (const double v : cluster) sum += v;
    centers.push_back(sum / static_cast<double>(cluster.size()));
  }
  return centers;
}

// Rank comparison is meaningful only when both sides order strictly, so rank
// ties and short maxima lists degrade to "not_applicable" instead of failing.
void fill_rank_comparison(const PeriodResult& carrier,
                          const std::vector<double>& maxima_values,
                          ComparisonReport& report) {
  report.rank_match = "not_applicable";
  if (carrier.kind != RegimeKind::Periodic) return;
  const auto period = static_cast<std::size_t>(carrier.period);
  if (maxima_values.size() < period) return;
  try {
    const auto carrier_rot = rotate_to_maximum(carrier.cycle);
    const std::vector<double> first_cycle(maxima_values.begin(),
                                          maxima_values.begin() + period);
    const auto rossler_rot = rotate_to_maximum(first_cycle);
    report.carrier_pattern = rank_order_pattern(carrier_rot);
    report.rossler_pattern = rank_order_pattern(rossler_rot);
    report.rank_match =
        compare_patterns(report.carrier_pattern, report.rossler_pattern)
            ? "equivalent"
            : "not_equivalent";
  } catch (const TieError&) {
    report.carrier_pattern.clear();
    report.rossler_pattern.clear();
    report.rank_match = "not_applicable";
  }
}

// Periodic carriers are synthesized as one closed cycle: the cycle rotated to
// start at its maximum, wrapped back to the start. Junction gaps additionally
// need the piece after the wrap, so that sequence extends two entries further
// and yields exactly one gap per cyclic junction.
std::vector<double> closed_cycle_radii(const PeriodResult& carrier) {
  auto rot = rotate_to_maximum(carrier.cycle);
  std::vector<double> radii;
  radii.reserve(rot.size() + 1);
  for (const double x : rot) radii.push_back(10.0 * x);
  radii.push_back(radii.front());
  return radii;
}

}  // namespace

ComparisonReport build_comparison(const CompareInputs& inputs) {
  ComparisonReport report;
  report.carrier_period = detect_period(inputs.lambda, inputs.x0,
                                        inputs.transient, inputs.max_period,
                                        inputs.tol);

  const Trajectory flow = integrate(inputs.rossler);
  const auto maxima = extract_x_maxima(flow, inputs.rossler.transient);
  std::vector<double> values;
  values.reserve(maxima.size());
  for (const auto& m : maxima) values.push_back(m.value);

  const auto clusters = cluster_values(values, inputs.cluster_tol);
  report.cluster_centers = cluster_means(clusters);
  report.rossler_period = static_cast<int>(clusters.size());

  fill_rank_comparison(report.carrier_period, values, report);

  std::vector<double> radii;
  if (report.carrier_period.kind == RegimeKind::Periodic) {
    radii = closed_cycle_radii(report.carrier_period);
  } else {
    radii = iterate_carrier({inputs.lambda, inputs.x0, inputs.niter}).radii;
  }
  const Trajectory synthesized = assemble_trajectory(radii, inputs.shape);
  const auto sep = min_separation(synthesized, kSeparationExclusion);
  report.min_separation = sep.distance;
  report.min_separation_i = sep.i;
  report.min_separation_j = sep.j;

  std::vector<double> junction_radii = radii;
  if (report.carrier_period.kind == RegimeKind::Periodic)
    junction_radii.push_back(radii[1 % radii.size()]);
  const auto gaps = piece_junction_gap(junction_radii, inputs.shape);
  report.junction_gap_max = 0.0;
  for (const double g : gaps)
    if (g > report.junction_gap_max) report.junction_gap_max = g;
  return report;
}

nlohmann::ordered_json comparison_json(const ComparisonReport& report) {
  nlohmann::ordered_json carrier;
  carrier["kind"] = kind_name(report.carrier_period.kind);
  carrier["period"] = report.carrier_period.period;
  carrier["cycle"] = report.carrier_period.cycle;
  carrier["lyapunov"] = report.carrier_period.lyapunov;

  nlohmann::ordered_json separation;
  separation["distance"] = report.min_separation;
  separation["i"] = report.min_separation_i;
  separation["j"] = report.min_separation_j;

  nlohmann::ordered_json out;
  out["carrier_period"] = std::move(carrier);
  out["rossler_period"] = report.rossler_period;
  out["cluster_centers"] = report.cluster_centers;
  out["rank_match"] = report.rank_match;
  out["carrier_pattern"] = report.carrier_pattern;
  out["rossler_pattern"] = report.rossler_pattern;
  out["min_separation"] = std::move(separation);
  out["junction_gap_max"] = report.junction_gap_max;
  return out;
}

}  // namespace pwa
