#include "pwa/cli.hpp"

#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pwa/analysis.hpp"
#include "pwa/carrier.hpp"
#include "pwa/errors.hpp"
#include "pwa/io.hpp"
#include "pwa/piecewise.hpp"
#include "pwa/report.hpp"
#include "pwa/rossler.hpp"

namespace pwa {

namespace {

struct Options {
  double lambda = 3.5;
  double x0 = 0.5;
  int niter = 64;
  int transient_iters = 1000;
  int max_period = 64;
  double tol = 1e-9;
  double lambda_min = 3.0;
  double lambda_max = 4.0;
  int steps = 100;
  RosslerParams rossler{};
  ShapeParams shape{};
  double cluster_tol = 0.05;
  std::string format;
  std::string output;
  std::string plane = "xy";
  std::string config_path;
};

// One config-file key mirroring one flag; the flag wins when both are given.
struct ConfigEntry {
  const char* key;
  const char* flag;
  std::variant<double*, int*, std::string*> target;
};

void apply_config(const std::string& path, CLI::App* sub,
                  const std::vector<ConfigEntry>& entries) {
  nlohmann::json config;
  try {
    config = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::domain_error("config file '" + path + "' is not valid JSON: " +
                            e.what());
  }
  if (!config.is_object())
    throw std::domain_error("config file '" + path +
                            "' must hold a JSON object");
  for (const auto& [key, value] : config.items()) {
    const ConfigEntry* entry = nullptr;
    for (const auto& candidate : entries) {
      if (key == candidate.key) {
        entry = &candidate;
        break;
      }
    }
    if (entry == nullptr)
      throw std::domain_error("unknown config key '" + key + "' for mode '" +
                              sub->get_name() + "'");
    if (sub->count(entry->flag) > 0) continue;
    std::visit(
        [&](auto* target) {
          using T = std::remove_pointer_t<decltype(target)>;
          if constexpr (std::is_same_v<T, double>) {
            if (!value.is_number())
              throw std::domain_error("config key '" + key +
                                      "' must be a number");
            *target = value.get<double>();
          } else if constexpr (std::is_same_v<T, int>) {
            if (!value.is_number_integer())
              throw std::domain_error("config key '" + key +
                                      "' must be an integer");
            *target = value.get<int>();
          } else {
            if (!value.is_string())
              throw std::domain_error("config key '" + key +
                                      "' must be a string");
            *target = value.get<std::string>();
          }
        },
        entry->target);
  }
}

Plane parse_plane(const std::string& name) {
  if (name == "xy") return Plane::XY;
  if (name == "xz") return Plane::XZ;
  if (name == "yz") return Plane::YZ;
  throw std::domain_error("plane must be xy, xz or yz, got '" + name + "'");
}

void check_format(const std::string& format,
                  const std::vector<std::string>& allowed,
                  const std::string& mode) {
  for (const auto& f : allowed)
    if (format == f) return;
  std::string list;
  for (std::size_t i = 0; i < allowed.size(); ++i) {
    if (i > 0) list += i + 1 == allowed.size() ? " or " : ", ";
    list += allowed[i];
  }
  throw std::domain_error("mode '" + mode + "' supports format " + list +
                          ", got '" + format + "'");
}

std::string json_text(const nlohmann::ordered_json& doc) {
  return doc.dump(2) + "\n";
}

void emit(const std::string& payload, const std::string& output) {
  if (output.empty())
    std::cout << payload;
  else
    write_text_file(output, payload);
}

nlohmann::ordered_json maxima_json(const std::vector<Maximum>& maxima) {
  // Insert both keys before taking references; ordered_json objects move
  // their elements on insertion.
  nlohmann::ordered_json out;
  out["t"] = nlohmann::ordered_json::array();
  out["xmax"] = nlohmann::ordered_json::array();
  auto& t = out["t"];
  auto& v = out["xmax"];
  for (const auto& m : maxima) {
    t.push_back(m.t);
    v.push_back(m.value);
  }
  return out;
}

void prepend_params(Trajectory& traj,
                    std::vector<std::pair<std::string, double>> front) {
  front.insert(front.end(), traj.meta.params.begin(), traj.meta.params.end());
  traj.meta.params = std::move(front);
}

int run_synthesize(const Options& opt) {
  check_format(opt.format, {"csv", "json", "svg"}, "synthesize");
  const auto seq = iterate_carrier({opt.lambda, opt.x0, opt.niter});
  Trajectory traj = assemble_trajectory(seq.radii, opt.shape);
  prepend_params(traj, {{"lambda", opt.lambda},
                        {"x0", opt.x0},
                        {"niter", static_cast<double>(opt.niter)}});
  if (opt.format == "csv")
    emit(trajectory_csv(traj), opt.output);
  else if (opt.format == "json")
    emit(json_text(trajectory_json(traj)), opt.output);
  else
    emit(projection_svg(traj, parse_plane(opt.plane)), opt.output);
  return 0;
}

int run_rossler(const Options& opt) {
  check_format(opt.format, {"csv", "json", "svg"}, "rossler");
  const Trajectory traj = integrate(opt.rossler);
  const auto maxima = extract_x_maxima(traj, opt.rossler.transient);
  const auto pairs = maxima.size() >= 2
                         ? first_return_map(maxima)
                         : std::vector<std::pair<double, double>>{};
  if (opt.format == "svg") {
    emit(projection_svg(traj, parse_plane(opt.plane)), opt.output);
    return 0;
  }
  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["trajectory"] = trajectory_json(traj);
    doc["maxima"] = maxima_json(maxima);
    doc["return_map"] = return_map_json(pairs);
    emit(json_text(doc), opt.output);
    return 0;
  }
  if (opt.output.empty()) {
    std::cout << trajectory_csv(traj);
    return 0;
  }
  const std::filesystem::path base(opt.output);
  const std::filesystem::path stem = base.parent_path() / base.stem();
  write_text_file(base, trajectory_csv(traj));
  write_text_file(stem.string() + "_maxima.csv", maxima_csv(maxima));
  write_text_file(stem.string() + "_return_map.csv", return_map_csv(pairs));
  return 0;
}

int run_carrier(const Options& opt) {
  check_format(opt.format, {"json", "csv"}, "carrier");
  const auto seq = iterate_carrier({opt.lambda, opt.x0, opt.niter});
  const auto result = detect_period(opt.lambda, opt.x0, opt.transient_iters,
                                    opt.max_period, opt.tol);
  if (opt.format == "json") {
    nlohmann::ordered_json sequence;
    sequence["x"] = nlohmann::ordered_json::array();
    sequence["r"] = nlohmann::ordered_json::array();
    auto& x = sequence["x"];
    auto& r = sequence["r"];
    for (std::size_t i = 0; i < seq.xs.size(); ++i) {
      x.push_back(seq.xs[i]);
      r.push_back(seq.radii[i]);
    }
    nlohmann::ordered_json doc;
    doc["sequence"] = std::move(sequence);
    doc["detection"] = period_result_json(result);
    emit(json_text(doc), opt.output);
    return 0;
  }
  emit(carrier_csv(seq), opt.output);
  std::cerr << "regime=" << kind_name(result.kind)
            << " period=" << result.period
            << " lyapunov=" << format_double(result.lyapunov) << "\n";
  return 0;
}

int run_bifurcation(const Options& opt) {
  check_format(opt.format, {"csv", "json"}, "bifurcation");
  const auto rows =
      bifurcation_scan(opt.lambda_min, opt.lambda_max, opt.steps, opt.x0,
                       opt.transient_iters, opt.max_period, opt.tol);
  if (opt.format == "csv")
    emit(bifurcation_csv(rows), opt.output);
  else
    emit(json_text(scan_json(rows)), opt.output);
  return 0;
}

int run_compare(const Options& opt) {
  check_format(opt.format, {"json"}, "compare");
  CompareInputs inputs;
  inputs.lambda = opt.lambda;
  inputs.x0 = opt.x0;
  inputs.transient = opt.transient_iters;
  inputs.max_period = opt.max_period;
  inputs.tol = opt.tol;
  inputs.rossler = opt.rossler;
  inputs.shape = opt.shape;
  inputs.cluster_tol = opt.cluster_tol;
  inputs.niter = opt.niter;
  emit(json_text(comparison_json(build_comparison(inputs))), opt.output);
  return 0;
}

void add_shape_flags(CLI::App* sub, Options& opt,
                     std::vector<ConfigEntry>& entries) {
  sub->add_option("--m3", opt.shape.m3, "Sigmoid center, normalized time");
  sub->add_option("--m4", opt.shape.m4, "Sigmoid width");
  sub->add_option("--m5", opt.shape.m5, "Dip amplitude");
  sub->add_option("--m6", opt.shape.m6, "Dip center, normalized time");
  sub->add_option("--m7", opt.shape.m7, "Bump amplitude");
  sub->add_option("--m8", opt.shape.m8, "Bump center, normalized time");
  sub->add_option("--gauss-a", opt.shape.gauss_a, "Window sharpness");
  sub->add_option("--c3", opt.shape.c3, "Elevation scale");
  sub->add_option("--phase", opt.shape.phase, "Elevation phase, radians");
  sub->add_option("--npoints", opt.shape.npoints, "Samples per piece");
  entries.insert(entries.end(),
                 {{"m3", "--m3", &opt.shape.m3},
                  {"m4", "--m4", &opt.shape.m4},
                  {"m5", "--m5", &opt.shape.m5},
                  {"m6", "--m6", &opt.shape.m6},
                  {"m7", "--m7", &opt.shape.m7},
                  {"m8", "--m8", &opt.shape.m8},
                  {"gauss_a", "--gauss-a", &opt.shape.gauss_a},
                  {"c3", "--c3", &opt.shape.c3},
                  {"phase", "--phase", &opt.shape.phase},
                  {"npoints", "--npoints", &opt.shape.npoints}});
}

void add_common_flags(CLI::App* sub, Options& opt,
                      std::vector<ConfigEntry>& entries) {
  sub->add_option("--format", opt.format,
                  "Output format; defaults to csv for trajectory and scan "
                  "tables, json for carrier and compare");
  sub->add_option("--output", opt.output,
                  "Output file; stdout when omitted");
  sub->add_option("--config", opt.config_path,
                  "JSON config file; explicit flags take precedence");
  entries.insert(entries.end(), {{"format", "--format", &opt.format},
                                 {"output", "--output", &opt.output}});
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{
      "Piecewise closed-form spiral synthesis driven by a logistic-map "
      "carrier, with a Rossler flow integrator for cross-checking."};
  app.require_subcommand(1);

  Options opt;
  std::vector<ConfigEntry> synth_entries, rossler_entries, carrier_entries,
      scan_entries, compare_entries;

  CLI::App* synth = app.add_subcommand(
      "synthesize", "Generate a piecewise spiral trajectory from the carrier");
  synth->add_option("--lambda", opt.lambda, "Carrier control parameter")
      ->capture_default_str();
  synth->add_option("--x0", opt.x0, "Carrier seed")->capture_default_str();
  synth->add_option("--niter", opt.niter, "Carrier iterations (pieces)")
      ->capture_default_str();
  synth->add_option("--plane", opt.plane, "Projection plane for svg output")
      ->capture_default_str();
  synth_entries.insert(synth_entries.end(),
                       {{"lambda", "--lambda", &opt.lambda},
                        {"x0", "--x0", &opt.x0},
                        {"niter", "--niter", &opt.niter},
                        {"plane", "--plane", &opt.plane}});
  add_shape_flags(synth, opt, synth_entries);
  add_common_flags(synth, opt, synth_entries);

  CLI::App* ross = app.add_subcommand(
      "rossler", "Integrate the Rossler flow; extract maxima and return map");
  ross->add_option("--a", opt.rossler.a, "Flow parameter a")
      ->capture_default_str();
  ross->add_option("--b", opt.rossler.b, "Flow parameter b")
      ->capture_default_str();
  ross->add_option("--c", opt.rossler.c, "Flow parameter c")->required();
  ross->add_option("--dt", opt.rossler.dt, "Integration step")
      ->capture_default_str();
  ross->add_option("--t-end", opt.rossler.t_end, "Integration horizon")
      ->capture_default_str();
  ross->add_option("--transient", opt.rossler.transient,
                   "Time discarded before maxima extraction")
      ->capture_default_str();
  ross->add_option("--x0", opt.rossler.initial_state.x, "Initial x")
      ->capture_default_str();
  ross->add_option("--y0", opt.rossler.initial_state.y, "Initial y")
      ->capture_default_str();
  ross->add_option("--z0", opt.rossler.initial_state.z, "Initial z")
      ->capture_default_str();
  ross->add_option("--plane", opt.plane, "Projection plane for svg output")
      ->capture_default_str();
  rossler_entries.insert(rossler_entries.end(),
                         {{"a", "--a", &opt.rossler.a},
                          {"b", "--b", &opt.rossler.b},
                          {"c", "--c", &opt.rossler.c},
                          {"dt", "--dt", &opt.rossler.dt},
                          {"t_end", "--t-end", &opt.rossler.t_end},
                          {"transient", "--transient", &opt.rossler.transient},
                          {"x0", "--x0", &opt.rossler.initial_state.x},
                          {"y0", "--y0", &opt.rossler.initial_state.y},
                          {"z0", "--z0", &opt.rossler.initial_state.z},
                          {"plane", "--plane", &opt.plane}});
  add_common_flags(ross, opt, rossler_entries);

  CLI::App* carrier = app.add_subcommand(
      "carrier", "Iterate the logistic carrier and classify its regime");
  carrier->add_option("--lambda", opt.lambda, "Carrier control parameter")
      ->capture_default_str();
  carrier->add_option("--x0", opt.x0, "Carrier seed")->capture_default_str();
  carrier->add_option("--niter", opt.niter, "Iterations to emit")
      ->capture_default_str();
  carrier->add_option("--transient", opt.transient_iters,
                      "Iterations discarded before detection")
      ->capture_default_str();
  carrier->add_option("--max-period", opt.max_period, "Largest period tried")
      ->capture_default_str();
  carrier->add_option("--tol", opt.tol, "Cycle closure tolerance")
      ->capture_default_str();
  carrier_entries.insert(
      carrier_entries.end(),
      {{"lambda", "--lambda", &opt.lambda},
       {"x0", "--x0", &opt.x0},
       {"niter", "--niter", &opt.niter},
       {"transient", "--transient", &opt.transient_iters},
       {"max_period", "--max-period", &opt.max_period},
       {"tol", "--tol", &opt.tol}});
  add_common_flags(carrier, opt, carrier_entries);

  CLI::App* scan = app.add_subcommand(
      "bifurcation", "Classify the carrier over a range of lambda values");
  scan->add_option("--lambda-min", opt.lambda_min, "Range start")->required();
  scan->add_option("--lambda-max", opt.lambda_max, "Range end")->required();
  scan->add_option("--steps", opt.steps, "Grid size")->capture_default_str();
  scan->add_option("--x0", opt.x0, "Carrier seed")->capture_default_str();
  scan->add_option("--transient", opt.transient_iters,
                   "Iterations discarded before detection")
      ->capture_default_str();
  scan->add_option("--max-period", opt.max_period, "Largest period tried")
      ->capture_default_str();
  scan->add_option("--tol", opt.tol, "Cycle closure tolerance")
      ->capture_default_str();
  scan_entries.insert(scan_entries.end(),
                      {{"lambda_min", "--lambda-min", &opt.lambda_min},
                       {"lambda_max", "--lambda-max", &opt.lambda_max},
                       {"steps", "--steps", &opt.steps},
                       {"x0", "--x0", &opt.x0},
                       {"transient", "--transient", &opt.transient_iters},
                       {"max_period", "--max-period", &opt.max_period},
                       {"tol", "--tol", &opt.tol}});
  add_common_flags(scan, opt, scan_entries);

  CLI::App* compare = app.add_subcommand(
      "compare", "Compare carrier cycle structure against flow maxima");
  compare->add_option("--lambda", opt.lambda, "Carrier control parameter")
      ->required();
  compare->add_option("--c", opt.rossler.c, "Flow parameter c")->required();
  compare->add_option("--x0", opt.x0, "Carrier seed")->capture_default_str();
  compare->add_option("--niter", opt.niter,
                      "Synthesis length for non-periodic carriers")
      ->capture_default_str();
  compare->add_option("--a", opt.rossler.a, "Flow parameter a")
      ->capture_default_str();
  compare->add_option("--b", opt.rossler.b, "Flow parameter b")
      ->capture_default_str();
  compare->add_option("--dt", opt.rossler.dt, "Integration step")
      ->capture_default_str();
  compare->add_option("--t-end", opt.rossler.t_end, "Integration horizon")
      ->capture_default_str();
  compare->add_option("--transient", opt.rossler.transient,
                      "Flow time discarded before maxima extraction")
      ->capture_default_str();
  compare->add_option("--cluster-tol", opt.cluster_tol,
                      "Maxima clustering tolerance")
      ->capture_default_str();
  compare_entries.insert(
      compare_entries.end(),
      {{"lambda", "--lambda", &opt.lambda},
       {"c", "--c", &opt.rossler.c},
       {"x0", "--x0", &opt.x0},
       {"niter", "--niter", &opt.niter},
       {"a", "--a", &opt.rossler.a},
       {"b", "--b", &opt.rossler.b},
       {"dt", "--dt", &opt.rossler.dt},
       {"t_end", "--t-end", &opt.rossler.t_end},
       {"transient", "--transient", &opt.rossler.transient},
       {"cluster_tol", "--cluster-tol", &opt.cluster_tol}});
  add_shape_flags(compare, opt, compare_entries);
  add_common_flags(compare, opt, compare_entries);

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("piecewise-attractor");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& s : full) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    CLI::App* active = nullptr;
    const std::vector<ConfigEntry>* entries = nullptr;
    int (*runner)(const Options&) = nullptr;
    const char* fallback_format = "csv";
    if (synth->parsed()) {
      active = synth, entries = &synth_entries, runner = run_synthesize;
    } else if (ross->parsed()) {
      active = ross, entries = &rossler_entries, runner = run_rossler;
    } else if (carrier->parsed()) {
      active = carrier, entries = &carrier_entries, runner = run_carrier;
      fallback_format = "json";
    } else if (scan->parsed()) {
      active = scan, entries = &scan_entries, runner = run_bifurcation;
    } else {
      active = compare, entries = &compare_entries, runner = run_compare;
      fallback_format = "json";
    }
    if (!opt.config_path.empty()) apply_config(opt.config_path, active, *entries);
    if (opt.format.empty()) opt.format = fallback_format;
    return runner(opt);
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pwa
