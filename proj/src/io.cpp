#include "pwa/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pwa/errors.hpp"

namespace pwa {

namespace {

constexpr double kSvgSize = 800.0;
constexpr double kSvgMargin = 40.0;  // 5% of the viewport per side

double parse_field(const std::string& field, const std::string& context) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &pos);
  } catch (const std::exception&) {
    throw IoError("bad numeric field '" + field + "' in " + context);
  }
  if (pos != field.size())
    throw IoError("bad numeric field '" + field + "' in " + context);
  return v;
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (const char ch : line) {
    if (ch == ',') {
      fields.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current.push_back(ch);
    }
  }
  fields.push_back(current);
  return fields;
}

void project(const Trajectory& traj, Plane plane, std::vector<double>& u,
             std::vector<double>& v) {
  u.reserve(traj.points.size());
  v.reserve(traj.points.size());
  for (const auto& p : traj.points) {
    switch (plane) {
      case Plane::XY: u.push_back(p.x); v.push_back(p.y); break;
      case Plane::XZ: u.push_back(p.x); v.push_back(p.z); break;
      case Plane::YZ: u.push_back(p.y); v.push_back(p.z); break;
    }
  }
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // collapse negative zero
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string kind_name(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::Periodic: return "periodic";
    case RegimeKind::Chaotic: return "chaotic";
    case RegimeKind::NotConverged: return "not_converged";
  }
  return "not_converged";
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t,x,y,z\n";
  out.reserve(out.size() + traj.points.size() * 48);
  for (const auto& p : traj.points) {
    out += format_double(p.t);
    out += ',';
    out += format_double(p.x);
    out += ',';
    out += format_double(p.y);
    out += ',';
    out += format_double(p.z);
    out += '\n';
  }
  return out;
}

std::string carrier_csv(const CarrierSequence& seq) {
  std::string out = "i,x,r\n";
  for (std::size_t i = 0; i < seq.xs.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(seq.xs[i]);
    out += ',';
    out += format_double(seq.radii[i]);
    out += '\n';
  }
  return out;
}

std::string bifurcation_csv(const std::vector<ScanRow>& rows) {
  std::string out = "lambda,period,kind,lyapunov\n";
  for (const auto& row : rows) {
    out += format_double(row.lambda);
    out += ',';
    out += std::to_string(row.result.period);
    out += ',';
    out += kind_name(row.result.kind);
    out += ',';
    out += format_double(row.result.lyapunov);
    out += '\n';
  }
  return out;
}

std::string return_map_csv(
    const std::vector<std::pair<double, double>>& pairs) {
  std::string out = "xmax_n,xmax_next\n";
  for (const auto& [a, b] : pairs) {
    out += format_double(a);
    out += ',';
    out += format_double(b);
    out += '\n';
  }
  return out;
}

std::string maxima_csv(const std::vector<Maximum>& maxima) {
  std::string out = "t,xmax\n";
  for (const auto& m : maxima) {
    out += format_double(m.t);
    out += ',';
    out += format_double(m.value);
    out += '\n';
  }
  return out;
}

Trajectory parse_trajectory_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty trajectory CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,x,y,z")
    throw IoError("unexpected trajectory CSV header '" + line + "'");

  Trajectory traj;
  traj.meta.source = "csv";
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_row(line);
    const std::string context = "row " + std::to_string(row);
    if (fields.size() != 4)
      throw IoError("expected 4 fields in " + context + ", got " +
                    std::to_string(fields.size()));
    traj.points.push_back({parse_field(fields[0], context),
                           parse_field(fields[1], context),
                           parse_field(fields[2], context),
                           parse_field(fields[3], context)});
    ++row;
  }
  return traj;
}

nlohmann::ordered_json trajectory_json(const Trajectory& traj) {
  nlohmann::ordered_json meta;
  meta["source"] = traj.meta.source;
  nlohmann::ordered_json params;
  for (const auto& [key, value] : traj.meta.params) params[key] = value;
  meta["params"] = std::move(params);

  // ordered_json's object is vector-backed: create every key before taking
  // references, later insertions would invalidate them.
  nlohmann::ordered_json points;
  points["t"] = nlohmann::ordered_json::array();
  points["x"] = nlohmann::ordered_json::array();
  points["y"] = nlohmann::ordered_json::array();
  points["z"] = nlohmann::ordered_json::array();
  auto& t = points["t"];
  auto& x = points["x"];
  auto& y = points["y"];
  auto& z = points["z"];
  for (const auto& p : traj.points) {
    t.push_back(p.t);
    x.push_back(p.x);
    y.push_back(p.y);
    z.push_back(p.z);
  }

  nlohmann::ordered_json out;
  out["meta"] = std::move(meta);
  out["points"] = std::move(points);
  return out;
}

nlohmann::ordered_json period_result_json(const PeriodResult& result) {
  nlohmann::ordered_json out;
  out["kind"] = kind_name(result.kind);
  out["period"] = result.period;
  out["cycle"] = result.cycle;
  out["lyapunov"] = result.lyapunov;
  return out;
}

nlohmann::ordered_json scan_json(const std::vector<ScanRow>& rows) {
  nlohmann::ordered_json out;
  out["rows"] = nlohmann::ordered_json::array();
  auto& arr = out["rows"];
  for (const auto& row : rows) {
    nlohmann::ordered_json entry;
    entry["lambda"] = row.lambda;
    entry["kind"] = kind_name(row.result.kind);
    entry["period"] = row.result.period;
    entry["lyapunov"] = row.result.lyapunov;
    entry["cycle"] = row.result.cycle;
    entry["samples"] = row.samples;
    arr.push_back(std::move(entry));
  }
  return out;
}

nlohmann::ordered_json return_map_json(
    const std::vector<std::pair<double, double>>& pairs) {
  nlohmann::ordered_json out;
  out["xmax_n"] = nlohmann::ordered_json::array();
  out["xmax_next"] = nlohmann::ordered_json::array();
  auto& a = out["xmax_n"];
  auto& b = out["xmax_next"];
  for (const auto& [first, second] : pairs) {
    a.push_back(first);
    b.push_back(second);
  }
  return out;
}

std::string projection_svg(const Trajectory& traj, Plane plane) {
  if (traj.points.empty())
    throw InsufficientDataError("cannot project an empty trajectory");

  std::vector<double> u, v;
  project(traj, plane, u, v);
  const auto [umin_it, umax_it] = std::minmax_element(u.begin(), u.end());
  const auto [vmin_it, vmax_it] = std::minmax_element(v.begin(), v.end());
  const double umin = *umin_it, umax = *umax_it;
  const double vmin = *vmin_it, vmax = *vmax_it;
  const double width = umax - umin;
  const double height = vmax - vmin;
  const double extent = std::max(width, height);
  const double usable = kSvgSize - 2.0 * kSvgMargin;
  const double scale = extent > 0.0 ? usable / extent : 1.0;
  const double ox = kSvgMargin + 0.5 * (usable - width * scale);
  const double oy = kSvgMargin + 0.5 * (usable - height * scale);

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\""
        " viewBox=\"0 0 800 800\">\n";
  os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"0.8\""
        " points=\"";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0) os << ' ';
    const double px = ox + (u[i] - umin) * scale;
    const double py = kSvgSize - (oy + (v[i] - vmin) * scale);
    os << px << ',' << py;
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return buffer.str();
}

void write_trajectory_csv(const Trajectory& traj,
                          const std::filesystem::path& path) {
  write_text_file(path, trajectory_csv(traj));
}

Trajectory read_trajectory_csv(const std::filesystem::path& path) {
  return parse_trajectory_csv(read_text_file(path));
}

void write_projection_svg(const Trajectory& traj, Plane plane,
                          const std::filesystem::path& path) {
  write_text_file(path, projection_svg(traj, plane));
}

}  // namespace pwa
