#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "pwa/analysis.hpp"
#include "pwa/carrier.hpp"
#include "pwa/rossler.hpp"
#include "pwa/trajectory.hpp"

#include <json.hpp>

namespace pwa {

enum class Plane { XY, XZ, YZ };

// Shared numeric formatting for CSV: 12 significant digits, negative zero
// collapsed to zero.
std::string format_double(double v);

// Lower-snake names used in both CSV and JSON output.
std::string kind_name(RegimeKind kind);

// CSV payloads. Header plus one row per record, LF line endings, trailing
// newline. Byte-identical for identical input.
std::string trajectory_csv(const Trajectory& traj);
std::string carrier_csv(const CarrierSequence& seq);
std::string bifurcation_csv(const std::vector<ScanRow>& rows);
std::string return_map_csv(const std::vector<std::pair<double, double>>& pairs);
std::string maxima_csv(const std::vector<Maximum>& maxima);

// Parses trajectory_csv output. Throws IoError on a malformed header or row.
Trajectory parse_trajectory_csv(const std::string& text);

// JSON payloads; ordered_json keeps key order stable across runs.
nlohmann::ordered_json trajectory_json(const Trajectory& traj);
nlohmann::ordered_json period_result_json(const PeriodResult& result);
nlohmann::ordered_json scan_json(const std::vector<ScanRow>& rows);
nlohmann::ordered_json return_map_json(
    const std::vector<std::pair<double, double>>& pairs);

// One polyline through the chosen plane, uniformly scaled into an 800x800
// viewport with 5% margins, y axis pointing up. Throws InsufficientDataError
// on an empty trajectory.
std::string projection_svg(const Trajectory& traj, Plane plane);

// File helpers; throw IoError with the path in the message.
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path);
Trajectory read_trajectory_csv(const std::filesystem::path& path);
void write_projection_svg(const Trajectory& traj, Plane plane,
                          const std::filesystem::path& path);

}  // namespace pwa
