// netsel: rank candidate networks, derive criterion weights and run the
// rank-reversal Monte-Carlo experiment.
//
//   netsel simulate --iterations 2000 --method topsis,saw --removal worst --out stats.csv
//   netsel weights  --class streaming --weighting bwm-gwo --method saw
//   netsel rank     --matrix nets.csv --method topsis --weighting ahp --class conversational

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "netsel/config.hpp"
#include "netsel/harness.hpp"
#include "netsel/io.hpp"
#include "netsel/madm.hpp"
#include "netsel/weighting.hpp"

namespace {

using namespace netsel;

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct FlagSet {
    std::string config_path;
    std::map<std::string, std::string> values;
    std::vector<std::pair<std::string, CLI::Option*>> options;
};

void add_value_flag(CLI::App& app, FlagSet& flags, const std::string& key, const std::string& help) {
    flags.options.emplace_back(key, app.add_option("--" + key, flags.values[key], help));
}

void add_bool_flag(CLI::App& app, FlagSet& flags, const std::string& key, const std::string& help) {
    flags.options.emplace_back(key, app.add_flag("--" + key + "{true}", flags.values[key], help));
}

void add_common_flags(CLI::App& app, FlagSet& flags) {
    app.add_option("--config", flags.config_path, "key = value settings file; flags override it");
    add_value_flag(app, flags, "seed", "master random seed");
    add_value_flag(app, flags, "method", "topsis, saw (comma list or 'all')");
    add_value_flag(app, flags, "weighting", "ahp, bwm, gwo, bwm-gwo (comma list or 'all')");
    add_value_flag(app, flags, "class", "conversational, background, interactive, streaming");
    add_value_flag(app, flags, "alpha", "subjective share of the hybrid weights");
    add_value_flag(app, flags, "beta", "objective share of the hybrid weights");
    add_value_flag(app, flags, "pack-size", "GWO pack size");
    add_value_flag(app, flags, "gwo-iters", "GWO iterations");
    add_value_flag(app, flags, "penalty", "GWO ordering-penalty coefficient");
    add_value_flag(app, flags, "networks", "candidate networks per generated scenario (multiple of 4)");
    add_value_flag(app, flags, "format", "csv or json");
    add_value_flag(app, flags, "verbosity", "0 = quiet, 1 = timing on stderr");
}

/// Config file first, then explicit flags in declaration order.
CliConfig resolve(const FlagSet& flags, CliConfig cfg = {}) {
    if (!flags.config_path.empty()) apply_settings(cfg, read_config_file(flags.config_path));
    for (const auto& [key, opt] : flags.options)
        if (opt->count() > 0) apply_setting(cfg, key, flags.values.at(key));
    return cfg;
}

// `weights` and `rank` evaluate one (method, weighting, class) at a time.
CliConfig single_choice_defaults(Weighting weighting) {
    CliConfig cfg;
    cfg.experiment.methods = {Method::Topsis};
    cfg.experiment.weightings = {weighting};
    cfg.experiment.classes = {TrafficClass::Conversational};
    return cfg;
}

template <typename T>
T single(const std::vector<T>& values, const char* what) {
    if (values.size() != 1) throw ConfigError(std::string("exactly one ") + what + " is required");
    return values.front();
}

std::ostream& output_stream(const CliConfig& cfg, std::ofstream& file) {
    if (cfg.out.empty()) return std::cout;
    file.open(cfg.out, std::ios::binary);
    if (!file) throw ConfigError("cannot write output file '" + cfg.out + "'");
    return file;
}

void print_summary(std::ostream& os, const std::vector<RrpStats>& stats) {
    os << std::left << std::setw(8) << "method" << std::setw(10) << "weighting" << std::setw(16) << "class"
       << std::setw(8) << "removal" << std::right << std::setw(11) << "incidence" << std::setw(12)
       << "step_ratio" << '\n';
    for (const auto& s : stats) {
        os << std::left << std::setw(8) << to_string(s.key.method) << std::setw(10)
           << to_string(s.key.weighting) << std::setw(16) << to_string(s.key.traffic_class) << std::setw(8)
           << to_string(s.key.removal) << std::right << std::fixed << std::setprecision(4) << std::setw(11)
           << s.incidence() << std::setw(12) << s.step_ratio() << '\n';
        os.unsetf(std::ios::floatfield);
    }
}

int cmd_simulate(const FlagSet& flags) {
    CliConfig cfg = resolve(flags);
    cfg.experiment.validate();

    const auto start = std::chrono::steady_clock::now();
    const auto stats = run_experiment(cfg.experiment);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (cfg.verbosity > 0)
        std::cerr << "simulate: " << cfg.experiment.iterations << " iterations in " << elapsed.count()
                  << " s\n";

    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    if (cfg.format == OutputFormat::Json)
        write_stats_json(os, stats, cfg.experiment);
    else
        write_stats_csv(os, stats);
    if (!cfg.out.empty()) print_summary(std::cout, stats);
    return 0;
}

int cmd_weights(const FlagSet& flags) {
    CliConfig cfg = resolve(flags, single_choice_defaults(Weighting::BwmGwo));
    auto& ex = cfg.experiment;
    const Weighting weighting = single(ex.weightings, "weighting");
    const TrafficClass tc = single(ex.classes, "traffic class");
    const Method method = single(ex.methods, "method");
    ex.validate();

    std::vector<NamedWeights> rows;
    if (weighting == Weighting::Ahp) {
        rows.push_back({"ahp", ahp_weights(tc)});
    } else {
        const WeightVector ws = solve_bwm(bwm_vectors(derive_limpo(tc))).w_star;
        rows.push_back({"subjective", ws});
        if (weighting != Weighting::Bwm) {
            const DecisionMatrix dm =
                cfg.matrix.empty() ? iteration_matrix(0, ex) : read_matrix_csv_file(cfg.matrix);
            const WeightVector wo = compute_weights(dm, method, Weighting::Gwo, tc, ex,
                                                    gwo_seed_for(0, ex, method, tc));
            rows.push_back({"objective", wo});
            if (weighting == Weighting::BwmGwo) rows.push_back({"combined", combine_weights(ws, wo, ex.hybrid)});
        }
    }

    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    if (cfg.format == OutputFormat::Json)
        write_weights_json(os, rows);
    else
        write_weights_csv(os, rows);
    return 0;
}

int cmd_rank(const FlagSet& flags) {
    CliConfig cfg = resolve(flags, single_choice_defaults(Weighting::Ahp));
    auto& ex = cfg.experiment;
    if (cfg.matrix.empty()) throw ConfigError("rank needs --matrix");
    const Weighting weighting = single(ex.weightings, "weighting");
    const TrafficClass tc = single(ex.classes, "traffic class");
    const Method method = single(ex.methods, "method");
    ex.validate();

    const DecisionMatrix dm = read_matrix_csv_file(cfg.matrix);
    const WeightVector w = compute_weights(dm, method, weighting, tc, ex, gwo_seed_for(0, ex, method, tc));
    const Ranking r = rank(method, dm, w);

    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    os << "rank,row,rat,score\n";
    for (std::size_t k = 0; k < r.order.size(); ++k) {
        const int row = r.order[k];
        os << k + 1 << ',' << row << ',' << to_string(dm.labels()[static_cast<std::size_t>(row)].rat) << ','
           << format_number(r.scores(row)) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Network selection with hybrid BWM/GWO criterion weights"};
    app.require_subcommand(1);

    FlagSet sim_flags;
    auto* sim = app.add_subcommand("simulate", "run the rank-reversal Monte-Carlo experiment");
    add_common_flags(*sim, sim_flags);
    add_value_flag(*sim, sim_flags, "iterations", "Monte-Carlo iterations");
    add_value_flag(*sim, sim_flags, "removal", "best, worst or both (comma list)");
    add_bool_flag(*sim, sim_flags, "chain", "remove repeatedly until two candidates remain");
    add_bool_flag(*sim, sim_flags, "reweight-per-step", "recompute GWO weights after each removal");
    add_value_flag(*sim, sim_flags, "threads", "worker threads (results do not depend on it)");
    add_value_flag(*sim, sim_flags, "out", "output file (stdout when omitted)");

    FlagSet w_flags;
    auto* weights = app.add_subcommand("weights", "print subjective, objective and combined weights");
    add_common_flags(*weights, w_flags);
    add_value_flag(*weights, w_flags, "matrix", "decision-matrix CSV for the objective weights");
    add_value_flag(*weights, w_flags, "out", "output file (stdout when omitted)");

    FlagSet r_flags;
    auto* rank_cmd = app.add_subcommand("rank", "rank the candidates of a decision-matrix CSV");
    add_common_flags(*rank_cmd, r_flags);
    add_value_flag(*rank_cmd, r_flags, "matrix", "decision-matrix CSV");
    add_value_flag(*rank_cmd, r_flags, "out", "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (sim->parsed()) return cmd_simulate(sim_flags);
        if (weights->parsed()) return cmd_weights(w_flags);
        return cmd_rank(r_flags);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const MatrixError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
