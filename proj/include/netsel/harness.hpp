#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "netsel/gwo.hpp"
#include "netsel/model.hpp"
#include "netsel/scenario.hpp"
#include "netsel/weighting.hpp"

namespace netsel {

enum class Weighting { Ahp, Bwm, Gwo, BwmGwo };
enum class Removal { Best, Worst };

inline constexpr std::array<Weighting, 4> kWeightings{Weighting::Ahp, Weighting::Bwm, Weighting::Gwo,
                                                      Weighting::BwmGwo};

std::string_view to_string(Weighting w);
std::string_view to_string(Removal r);
Weighting parse_weighting(std::string_view s);
Removal parse_removal(std::string_view s);

struct ExperimentConfig {
    int iterations = 2000;
    std::vector<Method> methods{Method::Topsis, Method::Saw};
    std::vector<Weighting> weightings{kWeightings.begin(), kWeightings.end()};
    std::vector<TrafficClass> classes{kTrafficClasses.begin(), kTrafficClasses.end()};
    std::vector<Removal> removals{Removal::Worst};
    bool chain = true;
    bool reweight_per_step = false;
    std::uint64_t seed = 1;
    ScenarioConfig scenario;
    GwoConfig gwo;
    HybridParams hybrid;
    int threads = 1;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct RrpKey {
    Method method;
    Weighting weighting;
    TrafficClass traffic_class;
    Removal removal;

    friend bool operator==(const RrpKey&, const RrpKey&) = default;
};

struct RrpStats {
    RrpKey key;
    std::int64_t iterations_with_reversal = 0;
    std::int64_t total_iterations = 0;
    std::int64_t reversal_steps = 0;
    std::int64_t total_steps = 0;

    double incidence() const {
        return total_iterations == 0 ? 0.0
                                     : static_cast<double>(iterations_with_reversal) / total_iterations;
    }
    double step_ratio() const {
        return total_steps == 0 ? 0.0 : static_cast<double>(reversal_steps) / total_steps;
    }

    friend bool operator==(const RrpStats&, const RrpStats&) = default;
};

/// Configuration cross product in output order: method, weighting, class, removal.
std::vector<RrpKey> enumerate_keys(const ExperimentConfig& cfg);

class MismatchedCandidates : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// True iff some surviving pair is ordered differently in `after` than in
/// `before` with `removed` deleted. Orders hold candidate ids, best first.
bool detect_rank_reversal(std::span<const int> before, std::span<const int> after, int removed);

/// Scores the rows of a (sub)matrix; used by the removal chain so tests can
/// substitute stub rankers.
using Scorer = std::function<Eigen::VectorXd(const DecisionMatrix&)>;

struct ChainRecord {
    int steps = 0;
    int reversals = 0;
    std::vector<std::vector<int>> orders;  // candidate ids per ranking, best first
};

/// Ranks, then removes the best or worst candidate and re-ranks, until two
/// candidates remain (chain) or once (no chain).
ChainRecord run_removal_chain(const DecisionMatrix& dm, const Scorer& scorer, Removal removal, bool chain);

/// Variant where the scorer is rebuilt for every remaining set (used when
/// weights are recomputed per removal step).
using ScorerFactory = std::function<Scorer(const DecisionMatrix&)>;
ChainRecord run_removal_chain(const DecisionMatrix& dm, const ScorerFactory& make_scorer,
                              Removal removal, bool chain);

struct IterationRecord {
    std::vector<ChainRecord> chains;  // parallel to enumerate_keys(cfg)
};

/// Weights for one (method, weighting, class) on a given matrix; the GWO part
/// uses `gwo_seed`.
WeightVector compute_weights(const DecisionMatrix& dm, Method method, Weighting weighting,
                             TrafficClass tc, const ExperimentConfig& cfg, std::uint64_t gwo_seed);

/// One Monte-Carlo iteration, generated from a stream derived from
/// (seed, iteration index). Optionally evaluates a supplied matrix instead.
IterationRecord run_iteration(std::int64_t index, const ExperimentConfig& cfg,
                              const std::optional<DecisionMatrix>& injected = std::nullopt);

DecisionMatrix iteration_matrix(std::int64_t index, const ExperimentConfig& cfg);
std::uint64_t gwo_seed_for(std::int64_t index, const ExperimentConfig& cfg, Method method, TrafficClass tc,
                           int step = 0);

/// Aggregates all iterations; spreads them over cfg.threads workers. Results
/// do not depend on the thread count.
std::vector<RrpStats> run_experiment(const ExperimentConfig& cfg);

}  // namespace netsel
