#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pwa {

// One sample. t is the global running sample index for synthesized
// trajectories and integration time for integrated ones; strictly
// increasing either way.
struct TrajectoryPoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Generation record. params keeps insertion order so serialized output is
// reproducible byte for byte.
struct TrajectoryMeta {
  std::string source;  // "synthesized" or "integrated"
  std::vector<std::pair<std::string, double>> params;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  TrajectoryMeta meta;
};

}  // namespace pwa
