#pragma once

#include <string>
#include <vector>

namespace pwa {

// Parses args (program name excluded) and runs one mode. Returns the process
// exit code: 0 success, 1 invalid configuration (bad flags, bad config file,
// domain errors, unwritable output), 2 numerical failure (divergence,
// insufficient data, ties).
int run_cli(const std::vector<std::string>& args);

}  // namespace pwa
