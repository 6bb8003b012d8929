#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netsel/harness.hpp"

namespace netsel {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

/// Everything the command-line front end can set. Keys are the long flag
/// names without leading dashes; a config file uses the same keys.
struct CliConfig {
    ExperimentConfig experiment;
    std::string out;
    OutputFormat format = OutputFormat::Csv;
    int verbosity = 0;
    std::string matrix;  // optional decision-matrix CSV for `weights` / `rank`
};

using Settings = std::vector<std::pair<std::string, std::string>>;

/// Flat `key = value` lines; `#` starts a comment. Throws ConfigError when
/// the file cannot be read or a line has no '='.
Settings read_config_file(const std::string& path);
Settings parse_config_text(std::string_view text, std::string_view origin = "<config>");

/// Applies one setting. Profile bounds use `profile.<rat>.<attr> = lo,hi`
/// (or a single fixed value). Throws ConfigError on unknown keys or values.
void apply_setting(CliConfig& cfg, const std::string& key, const std::string& value);
void apply_settings(CliConfig& cfg, const Settings& settings);

bool is_known_setting(std::string_view key);

}  // namespace netsel
