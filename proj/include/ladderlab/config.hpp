#pragma once

#include <string>

#include "ladderlab/errors.hpp"
#include "ladderlab/setlang.hpp"

namespace ladderlab {

// Engine limits, resolved as: built-in defaults < config file < command-line flags.
struct ToolConfig {
    long long window_cap = kDefaultWindowCap;
    unsigned long long node_budget = 100'000'000ULL;
    int workers = 1;
    long long time_limit_ms = 0;
};

// key=value lines, '#' comments. Keys: window_cap, node_budget, workers,
// time_limit_ms. Unknown or malformed keys raise ConfigError with the line.
ToolConfig config_from_file(const std::string& path);

// Reads the file named by `flag_path` if nonempty, else by LADDERLAB_CONFIG
// if set, else returns defaults.
ToolConfig config_load(const std::string& flag_path);

} // namespace ladderlab
