#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pwa/analysis.hpp"
#include "pwa/carrier.hpp"
#include "pwa/errors.hpp"
#include "pwa/io.hpp"
#include "pwa/piecewise.hpp"
#include "pwa/report.hpp"
#include "pwa/rossler.hpp"

namespace py = pybind11;

namespace {

py::array_t<double> trajectory_array(const pwa::Trajectory& traj) {
  const py::ssize_t n = static_cast<py::ssize_t>(traj.points.size());
  py::array_t<double> out({n, py::ssize_t{4}});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i) {
    const auto& p = traj.points[static_cast<std::size_t>(i)];
    view(i, 0) = p.t;
    view(i, 1) = p.x;
    view(i, 2) = p.y;
    view(i, 3) = p.z;
  }
  return out;
}

py::array_t<double> column_array(const std::vector<double>& values) {
  py::array_t<double> out(static_cast<py::ssize_t>(values.size()));
  auto view = out.mutable_unchecked<1>();
  for (py::ssize_t i = 0; i < view.shape(0); ++i)
    view(i) = values[static_cast<std::size_t>(i)];
  return out;
}

py::dict period_result_dict(const pwa::PeriodResult& res) {
  py::dict out;
  out["kind"] = pwa::kind_name(res.kind);
  out["period"] = res.period;
  out["cycle"] = column_array(res.cycle);
  out["lyapunov"] = res.lyapunov;
  return out;
}

// nlohmann -> native python, used for the comparison report so the module
// and the CLI expose the same document shape.
py::object json_to_py(const nlohmann::ordered_json& node) {
  using value_t = nlohmann::ordered_json::value_t;
  switch (node.type()) {
    case value_t::null:
      return py::none();
    case value_t::boolean:
      return py::bool_(node.get<bool>());
    case value_t::number_integer:
      return py::int_(node.get<long long>());
    case value_t::number_unsigned:
      return py::int_(node.get<unsigned long long>());
    case value_t::number_float:
      return py::float_(node.get<double>());
    case value_t::string:
      return py::str(node.get<std::string>());
    case value_t::array: {
      py::list out;
      for (const auto& item : node) out.append(json_to_py(item));
      return out;
    }
    case value_t::object: {
      py::dict out;
      for (const auto& [key, value] : node.items())
        out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

pwa::ShapeParams shape_from_args(double m3, double m4, double m5, double m6,
                                 double m7, double m8, double gauss_a,
                                 double c3, double phase, int npoints) {
  pwa::ShapeParams shape;
  shape.m3 = m3;
  shape.m4 = m4;
  shape.m5 = m5;
  shape.m6 = m6;
  shape.m7 = m7;
  shape.m8 = m8;
  shape.gauss_a = gauss_a;
  shape.c3 = c3;
  shape.phase = phase;
  shape.npoints = npoints;
  return shape;
}

std::vector<pwa::Maximum> maxima_from_array(
    const py::array_t<double, py::array::c_style | py::array::forcecast>&
        arr) {
  if (arr.ndim() != 2 || arr.shape(1) != 2)
    throw std::domain_error("maxima array must have shape (n, 2)");
  auto view = arr.unchecked<2>();
  std::vector<pwa::Maximum> out(static_cast<std::size_t>(view.shape(0)));
  for (py::ssize_t i = 0; i < view.shape(0); ++i)
    out[static_cast<std::size_t>(i)] = {view(i, 0), view(i, 1)};
  return out;
}

constexpr pwa::ShapeParams kShapeDefaults{};
constexpr pwa::RosslerParams kFlowDefaults{};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Piecewise closed-form attractor synthesis, logistic carrier analysis, "
      "and reference flow integration";

  py::register_exception<pwa::DivergenceError>(m, "DivergenceError",
                                               PyExc_RuntimeError);
  py::register_exception<pwa::InsufficientDataError>(m, "InsufficientDataError",
                                                     PyExc_RuntimeError);
  py::register_exception<pwa::TieError>(m, "TieError", PyExc_RuntimeError);

  m.def(
      "logistic_step",
      [](double x, double lam) { return pwa::logistic_step(x, lam); },
      py::arg("x"), py::arg("lam"),
      "One logistic-map update lam * x * (1 - x).");

  m.def(
      "carrier_sequence",
      [](double lam, double x0, int niter) {
        pwa::CarrierConfig config;
        config.lambda = lam;
        config.x0 = x0;
        config.niter = niter;
        const auto seq = pwa::iterate_carrier(config);
        py::dict out;
        out["x"] = column_array(seq.xs);
        out["r"] = column_array(seq.radii);
        return out;
      },
      py::arg("lam"), py::arg("x0") = 0.5, py::arg("niter") = 64,
      "Iterate the logistic carrier; returns dict with the orbit 'x' "
      "(niter + 1 values including x0) and the radius sequence 'r' = 10 x.");

  m.def(
      "detect_period",
      [](double lam, double x0, int transient, int max_period, double tol) {
        return period_result_dict(
            pwa::detect_period(lam, x0, transient, max_period, tol));
      },
      py::arg("lam"), py::arg("x0") = 0.5, py::arg("transient") = 1000,
      py::arg("max_period") = 64, py::arg("tol") = 1e-9,
      "Classify the carrier at lam as periodic, chaotic, or not converged; "
      "returns dict with kind, period, cycle, lyapunov.");

  m.def(
      "lyapunov_estimate",
      [](double lam, double x0, int transient, int count) {
        return pwa::lyapunov_estimate(lam, x0, transient, count);
      },
      py::arg("lam"), py::arg("x0") = 0.5, py::arg("transient") = 1000,
      py::arg("count") = 2048,
      "Average log-derivative over count post-transient iterates.");

  m.def(
      "bifurcation_scan",
      [](double lambda_min, double lambda_max, int steps, double x0,
         int transient, int max_period, double tol) {
        const auto rows = pwa::bifurcation_scan(lambda_min, lambda_max, steps,
                                                x0, transient, max_period, tol);
        std::vector<double> lams, lyap;
        std::vector<int> periods;
        py::list kinds;
        lams.reserve(rows.size());
        lyap.reserve(rows.size());
        periods.reserve(rows.size());
        for (const auto& row : rows) {
          lams.push_back(row.lambda);
          periods.push_back(row.result.period);
          lyap.push_back(row.result.lyapunov);
          kinds.append(std::string(pwa::kind_name(row.result.kind)));
        }
        py::dict out;
        out["lam"] = column_array(lams);
        out["period"] = py::array_t<int>(
            static_cast<py::ssize_t>(periods.size()), periods.data());
        out["kind"] = kinds;
        out["lyapunov"] = column_array(lyap);
        return out;
      },
      py::arg("lambda_min"), py::arg("lambda_max"), py::arg("steps"),
      py::arg("x0") = 0.5, py::arg("transient") = 1000,
      py::arg("max_period") = 64, py::arg("tol") = 1e-9,
      "Column-oriented regime scan over a uniform lambda grid.");

  m.def(
      "synthesize",
      [](const std::vector<double>& radii, double m3, double m4, double m5,
         double m6, double m7, double m8, double gauss_a, double c3,
         double phase, int npoints) {
        const auto shape = shape_from_args(m3, m4, m5, m6, m7, m8, gauss_a,
                                           c3, phase, npoints);
        return trajectory_array(pwa::assemble_trajectory(radii, shape));
      },
      py::arg("radii"), py::arg("m3") = kShapeDefaults.m3,
      py::arg("m4") = kShapeDefaults.m4, py::arg("m5") = kShapeDefaults.m5,
      py::arg("m6") = kShapeDefaults.m6, py::arg("m7") = kShapeDefaults.m7,
      py::arg("m8") = kShapeDefaults.m8,
      py::arg("gauss_a") = kShapeDefaults.gauss_a,
      py::arg("c3") = kShapeDefaults.c3, py::arg("phase") = kShapeDefaults.phase,
      py::arg("npoints") = kShapeDefaults.npoints,
      "Assemble the closed-form trajectory for a radius sequence; returns an "
      "(n, 4) array with columns t, x, y, z.");

  m.def(
      "junction_gaps",
      [](const std::vector<double>& radii, double m3, double m4, double m5,
         double m6, double m7, double m8, double gauss_a, double c3,
         double phase, int npoints) {
        const auto shape = shape_from_args(m3, m4, m5, m6, m7, m8, gauss_a,
                                           c3, phase, npoints);
        return column_array(pwa::piece_junction_gap(radii, shape));
      },
      py::arg("radii"), py::arg("m3") = kShapeDefaults.m3,
      py::arg("m4") = kShapeDefaults.m4, py::arg("m5") = kShapeDefaults.m5,
      py::arg("m6") = kShapeDefaults.m6, py::arg("m7") = kShapeDefaults.m7,
      py::arg("m8") = kShapeDefaults.m8,
      py::arg("gauss_a") = kShapeDefaults.gauss_a,
      py::arg("c3") = kShapeDefaults.c3, py::arg("phase") = kShapeDefaults.phase,
      py::arg("npoints") = kShapeDefaults.npoints,
      "Radius mismatch where each piece hands off to the next.");

  m.def(
      "integrate",
      [](double a, double b, double c, double dt, double t_end,
         double transient, double x0, double y0, double z0) {
        pwa::RosslerParams params;
        params.a = a;
        params.b = b;
        params.c = c;
        params.dt = dt;
        params.t_end = t_end;
        params.transient = transient;
        params.initial_state = {x0, y0, z0};
        return trajectory_array(pwa::integrate(params));
      },
      py::arg("a") = kFlowDefaults.a, py::arg("b") = kFlowDefaults.b,
      py::arg("c") = kFlowDefaults.c, py::arg("dt") = kFlowDefaults.dt,
      py::arg("t_end") = kFlowDefaults.t_end,
      py::arg("transient") = kFlowDefaults.transient,
      py::arg("x0") = kFlowDefaults.initial_state.x,
      py::arg("y0") = kFlowDefaults.initial_state.y,
      py::arg("z0") = kFlowDefaults.initial_state.z,
      "Fourth-order integration of the reference flow; returns an (n, 4) "
      "array with columns t, x, y, z covering the full run.");

  m.def(
      "x_maxima",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>&
             traj,
         double transient) {
        if (traj.ndim() != 2 || traj.shape(1) < 2)
          throw std::domain_error(
              "trajectory array must have shape (n, k) with k >= 2 and "
              "columns t, x, ...");
        auto view = traj.unchecked<2>();
        pwa::Trajectory native;
        native.points.resize(static_cast<std::size_t>(view.shape(0)));
        for (py::ssize_t i = 0; i < view.shape(0); ++i) {
          auto& p = native.points[static_cast<std::size_t>(i)];
          p.t = view(i, 0);
          p.x = view(i, 1);
        }
        const auto maxima = pwa::extract_x_maxima(native, transient);
        py::array_t<double> out(
            {static_cast<py::ssize_t>(maxima.size()), py::ssize_t{2}});
        auto w = out.mutable_unchecked<2>();
        for (py::ssize_t i = 0; i < w.shape(0); ++i) {
          w(i, 0) = maxima[static_cast<std::size_t>(i)].t;
          w(i, 1) = maxima[static_cast<std::size_t>(i)].value;
        }
        return out;
      },
      py::arg("trajectory"), py::arg("transient") = 0.0,
      "Parabolically refined x maxima after the transient; takes an (n, k>=2) "
      "array with columns t, x, ... and returns an (m, 2) array of t, value.");

  m.def(
      "first_return_map",
      [](const py::array_t<double,
                           py::array::c_style | py::array::forcecast>& maxima) {
        const auto pairs = pwa::first_return_map(maxima_from_array(maxima));
        py::array_t<double> out(
            {static_cast<py::ssize_t>(pairs.size()), py::ssize_t{2}});
        auto w = out.mutable_unchecked<2>();
        for (py::ssize_t i = 0; i < w.shape(0); ++i) {
          w(i, 0) = pairs[static_cast<std::size_t>(i)].first;
          w(i, 1) = pairs[static_cast<std::size_t>(i)].second;
        }
        return out;
      },
      py::arg("maxima"),
      "Successive-maxima pairs (v_n, v_n+1) from an (m, 2) maxima array.");

  m.def(
      "compare",
      [](double lam, double c, double x0, int transient, int max_period,
         double tol, double a, double b, double dt, double t_end,
         double flow_transient, double cluster_tol, int niter, double m3,
         double m4, double m5, double m6, double m7, double m8, double gauss_a,
         double c3, double phase, int npoints) {
        pwa::CompareInputs inputs;
        inputs.lambda = lam;
        inputs.x0 = x0;
        inputs.transient = transient;
        inputs.max_period = max_period;
        inputs.tol = tol;
        inputs.rossler.a = a;
        inputs.rossler.b = b;
        inputs.rossler.c = c;
        inputs.rossler.dt = dt;
        inputs.rossler.t_end = t_end;
        inputs.rossler.transient = flow_transient;
        inputs.shape = shape_from_args(m3, m4, m5, m6, m7, m8, gauss_a, c3,
                                       phase, npoints);
        inputs.cluster_tol = cluster_tol;
        inputs.niter = niter;
        return json_to_py(pwa::comparison_json(pwa::build_comparison(inputs)));
      },
      py::arg("lam"), py::arg("c"), py::arg("x0") = 0.5,
      py::arg("transient") = 1000, py::arg("max_period") = 64,
      py::arg("tol") = 1e-9, py::arg("a") = kFlowDefaults.a,
      py::arg("b") = kFlowDefaults.b, py::arg("dt") = kFlowDefaults.dt,
      py::arg("t_end") = kFlowDefaults.t_end,
      py::arg("flow_transient") = kFlowDefaults.transient,
      py::arg("cluster_tol") = 0.05, py::arg("niter") = 64,
      py::arg("m3") = kShapeDefaults.m3, py::arg("m4") = kShapeDefaults.m4,
      py::arg("m5") = kShapeDefaults.m5, py::arg("m6") = kShapeDefaults.m6,
      py::arg("m7") = kShapeDefaults.m7, py::arg("m8") = kShapeDefaults.m8,
      py::arg("gauss_a") = kShapeDefaults.gauss_a,
      py::arg("c3") = kShapeDefaults.c3,
      py::arg("phase") = kShapeDefaults.phase,
      py::arg("npoints") = kShapeDefaults.npoints,
      "Side-by-side carrier and flow periodicity report as a plain dict; "
      "mirrors the CLI compare document.");

  m.def(
      "min_separation",
      [](const py::array_t<double,
                           py::array::c_style | py::array::forcecast>& traj,
         std::size_t exclusion) {
        if (traj.ndim() != 2 || traj.shape(1) != 4)
          throw std::domain_error("trajectory array must have shape (n, 4)");
        auto view = traj.unchecked<2>();
        pwa::Trajectory native;
        native.points.resize(static_cast<std::size_t>(view.shape(0)));
        for (py::ssize_t i = 0; i < view.shape(0); ++i) {
          auto& p = native.points[static_cast<std::size_t>(i)];
          p.t = view(i, 0);
          p.x = view(i, 1);
          p.y = view(i, 2);
          p.z = view(i, 3);
        }
        const auto sep = pwa::min_separation(native, exclusion);
        py::dict out;
        out["distance"] = sep.distance;
        out["i"] = sep.i;
        out["j"] = sep.j;
        return out;
      },
      py::arg("trajectory"), py::arg("exclusion") = std::size_t{5},
      "Closest approach between non-adjacent samples of an (n, 4) trajectory "
      "array; returns dict with distance, i, j.");
}
