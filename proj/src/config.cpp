#include "ladderlab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ladderlab {

ToolConfig config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open " + path);
    ToolConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed;
        for (char c : line) {
            if (c == '#') break;
            trimmed += c;
        }
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        std::size_t start = 0;
        while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start])))
            ++start;
        trimmed = trimmed.substr(start);
        if (trimmed.empty()) continue;
        std::size_t eq = trimmed.find('=');
        if (eq == std::string::npos) throw ConfigError(lineno, "expected key=value");
        std::string key = trimmed.substr(0, eq);
        std::string value = trimmed.substr(eq + 1);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
            key.pop_back();
        std::size_t vs = 0;
        while (vs < value.size() && std::isspace(static_cast<unsigned char>(value[vs]))) ++vs;
        value = value.substr(vs);
        long long parsed = 0;
        try {
            std::size_t used = 0;
            parsed = std::stoll(value, &used);
            if (used != value.size()) throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
            throw ConfigError(lineno, "key '" + key + "' needs an integer value, got '" +
                                          value + "'");
        }
        if (key == "window_cap") {
            if (parsed < 1) throw ConfigError(lineno, "window_cap must be positive");
            cfg.window_cap = parsed;
        } else if (key == "node_budget") {
            if (parsed < 1) throw ConfigError(lineno, "node_budget must be positive");
            cfg.node_budget = static_cast<unsigned long long>(parsed);
        } else if (key == "workers") {
            if (parsed < 1) throw ConfigError(lineno, "workers must be positive");
            cfg.workers = static_cast<int>(parsed);
        } else if (key == "time_limit_ms") {
            if (parsed < 0) throw ConfigError(lineno, "time_limit_ms must be nonnegative");
            cfg.time_limit_ms = parsed;
        } else {
            throw ConfigError(lineno, "unknown key '" + key + "'");
        }
    }
    return cfg;
}

ToolConfig config_load(const std::string& flag_path) {
    if (!flag_path.empty()) return config_from_file(flag_path);
    if (const char* env = std::getenv("LADDERLAB_CONFIG"); env && *env)
        return config_from_file(env);
    return ToolConfig{};
}

} // namespace ladderlab
