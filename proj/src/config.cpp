#include "netsel/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace netsel {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream ss(value);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const std::string& why) {
    throw ConfigError("invalid value '" + value + "' for '" + key + "': " + why);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    T v{};
    const std::string t = trim(value);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) bad_value(key, value, "not a number");
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    const std::string t = trim(value);
    if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
    if (t == "false" || t == "0" || t == "no" || t == "off") return false;
    bad_value(key, value, "expected true or false");
}

template <typename T, typename Parse, typename All>
std::vector<T> parse_enum_list(const std::string& key, const std::string& value, Parse parse, const All& all) {
    const auto items = split_list(value);
    if (items.size() == 1 && items[0] == "all") return {all.begin(), all.end()};
    if (items.empty()) bad_value(key, value, "empty list");
    std::vector<T> out;
    for (const auto& item : items) {
        T v{};
        try {
            v = parse(item);
        } catch (const std::invalid_argument& e) {
            bad_value(key, value, e.what());
        }
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

constexpr std::array kKeys{
    "iterations", "seed",  "method",  "weighting", "class",   "removal",           "chain",
    "alpha",      "beta",  "pack-size", "gwo-iters", "penalty", "networks",        "out",
    "format",     "threads", "verbosity", "matrix", "reweight-per-step",
};

void apply_profile(CliConfig& cfg, const std::string& key, const std::string& value) {
    // profile.<rat>.<attr>
    const auto dot = key.find('.', 8);
    if (dot == std::string::npos) throw ConfigError("malformed profile key '" + key + "'");
    Rat rat{};
    AttributeId attr{};
    try {
        rat = parse_rat(key.substr(8, dot - 8));
        attr = parse_attribute(key.substr(dot + 1));
    } catch (const std::invalid_argument& e) {
        throw ConfigError("malformed profile key '" + key + "': " + e.what());
    }
    const auto bounds = split_list(value);
    if (bounds.empty() || bounds.size() > 2) bad_value(key, value, "expected 'lo,hi' or a single value");
    Range r;
    r.lo = parse_number<double>(key, bounds[0]);
    r.hi = bounds.size() == 2 ? parse_number<double>(key, bounds[1]) : r.lo;
    if (r.lo > r.hi || r.lo < 0.0) bad_value(key, value, "need 0 <= lo <= hi");
    cfg.experiment.scenario.profiles[static_cast<std::size_t>(rat)][attr] = r;
}

}  // namespace

bool is_known_setting(std::string_view key) {
    return key.starts_with("profile.") ||
           std::find(kKeys.begin(), kKeys.end(), key) != kKeys.end();
}

Settings parse_config_text(std::string_view text, std::string_view origin) {
    Settings out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(std::string(origin) + ":" + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(std::string_view(t).substr(0, eq));
        if (key.starts_with("--")) key.erase(0, 2);
        out.emplace_back(std::move(key), trim(std::string_view(t).substr(eq + 1)));
    }
    return out;
}

Settings read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

void apply_setting(CliConfig& cfg, const std::string& key, const std::string& value) {
    auto& ex = cfg.experiment;
    if (key == "iterations") {
        ex.iterations = parse_number<int>(key, value);
        if (ex.iterations < 1) bad_value(key, value, "must be >= 1");
    } else if (key == "seed") {
        ex.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "method") {
        ex.methods = parse_enum_list<Method>(key, value, parse_method,
                                             std::array{Method::Topsis, Method::Saw});
    } else if (key == "weighting") {
        ex.weightings = parse_enum_list<Weighting>(key, value, parse_weighting, kWeightings);
    } else if (key == "class") {
        ex.classes = parse_enum_list<TrafficClass>(key, value, parse_traffic_class, kTrafficClasses);
    } else if (key == "removal") {
        ex.removals = parse_enum_list<Removal>(key, value, parse_removal,
                                               std::array{Removal::Best, Removal::Worst});
    } else if (key == "chain") {
        ex.chain = parse_bool(key, value);
    } else if (key == "reweight-per-step") {
        ex.reweight_per_step = parse_bool(key, value);
    } else if (key == "alpha") {
        ex.hybrid.alpha = parse_number<double>(key, value);
    } else if (key == "beta") {
        ex.hybrid.beta = parse_number<double>(key, value);
    } else if (key == "pack-size") {
        ex.gwo.pack_size = parse_number<int>(key, value);
        if (ex.gwo.pack_size < 4) bad_value(key, value, "must be >= 4");
    } else if (key == "gwo-iters") {
        ex.gwo.iterations = parse_number<int>(key, value);
        if (ex.gwo.iterations < 1) bad_value(key, value, "must be >= 1");
    } else if (key == "penalty") {
        ex.gwo.penalty_coeff = parse_number<double>(key, value);
        if (!(ex.gwo.penalty_coeff > 0.0)) bad_value(key, value, "must be > 0");
    } else if (key == "networks") {
        ex.scenario.networks_per_iteration = parse_number<int>(key, value);
        if (ex.scenario.networks_per_iteration < 4 || ex.scenario.networks_per_iteration % 4 != 0)
            bad_value(key, value, "must be a positive multiple of 4");
    } else if (key == "threads") {
        ex.threads = parse_number<int>(key, value);
        if (ex.threads < 1) bad_value(key, value, "must be >= 1");
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "format") {
        if (value == "csv") cfg.format = OutputFormat::Csv;
        else if (value == "json") cfg.format = OutputFormat::Json;
        else bad_value(key, value, "expected csv or json");
    } else if (key == "verbosity") {
        cfg.verbosity = parse_number<int>(key, value);
    } else if (key == "matrix") {
        cfg.matrix = value;
    } else if (key.starts_with("profile.")) {
        apply_profile(cfg, key, value);
    } else {
        throw ConfigError("unknown setting '" + key + "'");
    }
}

void apply_settings(CliConfig& cfg, const Settings& settings) {
    for (const auto& [k, v] : settings) apply_setting(cfg, k, v);
}

}  // namespace netsel
