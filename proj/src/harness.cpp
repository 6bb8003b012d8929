#include "netsel/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "netsel/madm.hpp"

namespace netsel {

std::string_view to_string(Weighting w) {
    switch (w) {
        case Weighting::Ahp: return "ahp";
        case Weighting::Bwm: return "bwm";
        case Weighting::Gwo: return "gwo";
        case Weighting::BwmGwo: return "bwm-gwo";
    }
    return "?";
}

std::string_view to_string(Removal r) { return r == Removal::Best ? "best" : "worst"; }

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

Weighting parse_weighting(std::string_view s) {
    const std::string key = lower(s);
    for (Weighting w : kWeightings)
        if (key == to_string(w)) return w;
    throw std::invalid_argument("unknown weighting '" + std::string(s) + "'");
}

Removal parse_removal(std::string_view s) {
    const std::string key = lower(s);
    if (key == "best") return Removal::Best;
    if (key == "worst") return Removal::Worst;
    throw std::invalid_argument("unknown removal mode '" + std::string(s) + "'");
}

void ExperimentConfig::validate() const {
    if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    if (methods.empty()) throw std::invalid_argument("at least one method is required");
    if (weightings.empty()) throw std::invalid_argument("at least one weighting is required");
    if (classes.empty()) throw std::invalid_argument("at least one traffic class is required");
    if (removals.empty()) throw std::invalid_argument("at least one removal mode is required");
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
    scenario.validate();
    gwo.validate();
    hybrid.validate();
}

std::vector<RrpKey> enumerate_keys(const ExperimentConfig& cfg) {
    std::vector<RrpKey> keys;
    for (Method m : cfg.methods)
        for (Weighting w : cfg.weightings)
            for (TrafficClass tc : cfg.classes)
                for (Removal r : cfg.removals) keys.push_back({m, w, tc, r});
    return keys;
}

bool detect_rank_reversal(std::span<const int> before, std::span<const int> after, int removed) {
    if (after.size() + 1 != before.size())
        throw MismatchedCandidates("after-ranking must hold exactly one candidate fewer");
    std::vector<int> survivors;
    survivors.reserve(after.size());
    bool found = false;
    for (int id : before) {
        if (id == removed && !found) {
            found = true;
            continue;
        }
        survivors.push_back(id);
    }
    if (!found) throw MismatchedCandidates("removed candidate " + std::to_string(removed) +
                                           " is not in the before-ranking");
    if (!std::is_permutation(survivors.begin(), survivors.end(), after.begin(), after.end()))
        throw MismatchedCandidates("after-ranking does not rank the surviving candidates");
    // Same candidate set: any pair flip shows up as a positional difference.
    return !std::equal(survivors.begin(), survivors.end(), after.begin(), after.end());
}

namespace {

std::vector<int> ranked_ids(const Eigen::VectorXd& scores, std::span<const int> ids) {
    const Ranking r = make_ranking(scores, Method::Topsis);
    std::vector<int> out;
    out.reserve(ids.size());
    for (int local : r.order) out.push_back(ids[static_cast<std::size_t>(local)]);
    return out;
}

}  // namespace

ChainRecord run_removal_chain(const DecisionMatrix& dm, const ScorerFactory& make_scorer,
                              Removal removal, bool chain) {
    std::vector<int> ids(static_cast<std::size_t>(dm.rows()));
    std::iota(ids.begin(), ids.end(), 0);

    ChainRecord rec;
    auto score = [&](const std::vector<int>& set) {
        const DecisionMatrix sub = dm.select_rows(set);
        return ranked_ids(make_scorer(sub)(sub), set);
    };
    rec.orders.push_back(score(ids));

    const std::size_t stop = chain ? 2 : std::max<std::size_t>(ids.size(), 2) - 1;
    while (ids.size() > stop) {
        const auto& before = rec.orders.back();
        const int removed = removal == Removal::Best ? before.front() : before.back();
        ids.erase(std::find(ids.begin(), ids.end(), removed));
        auto after = score(ids);
        if (detect_rank_reversal(before, after, removed)) ++rec.reversals;
        ++rec.steps;
        rec.orders.push_back(std::move(after));
    }
    return rec;
}

ChainRecord run_removal_chain(const DecisionMatrix& dm, const Scorer& scorer, Removal removal, bool chain) {
    return run_removal_chain(dm, ScorerFactory([&](const DecisionMatrix&) { return scorer; }), removal,
                             chain);
}

DecisionMatrix iteration_matrix(std::int64_t index, const ExperimentConfig& cfg) {
    RandomStream stream(derive_seed(cfg.seed, static_cast<std::uint64_t>(index), 0));
    return generate_networks(cfg.scenario, stream);
}

std::uint64_t gwo_seed_for(std::int64_t index, const ExperimentConfig& cfg, Method method, TrafficClass tc,
                           int step) {
    const auto tag = 1 + static_cast<std::uint64_t>(method) * 4 + static_cast<std::uint64_t>(tc) +
                     16 * static_cast<std::uint64_t>(step);
    return derive_seed(cfg.seed, static_cast<std::uint64_t>(index), tag);
}

namespace {

const WeightVector& bwm_weights(TrafficClass tc) {
    static const std::array<WeightVector, 4> cache = [] {
        auto solve = [](TrafficClass c) { return solve_bwm(bwm_vectors(derive_limpo(c))).w_star; };
        return std::array<WeightVector, 4>{solve(kTrafficClasses[0]), solve(kTrafficClasses[1]),
                                           solve(kTrafficClasses[2]), solve(kTrafficClasses[3])};
    }();
    return cache[static_cast<std::size_t>(tc)];
}

Scorer scorer_for(Method method, WeightVector w) {
    return [method, w = std::move(w)](const DecisionMatrix& dm) -> Eigen::VectorXd {
        return method_scores(method, dm.values(), w.values(), kDirections);
    };
}

}  // namespace

WeightVector compute_weights(const DecisionMatrix& dm, Method method, Weighting weighting,
                             TrafficClass tc, const ExperimentConfig& cfg, std::uint64_t gwo_seed) {
    auto objective = [&] {
        GwoConfig g = cfg.gwo;
        g.seed = gwo_seed;
        return gwo_optimize(dm, derive_limpo(tc), method, g).weights;
    };
    switch (weighting) {
        case Weighting::Ahp: return ahp_weights(tc);
        case Weighting::Bwm: return bwm_weights(tc);
        case Weighting::Gwo: return objective();
        case Weighting::BwmGwo: return combine_weights(bwm_weights(tc), objective(), cfg.hybrid);
    }
    throw std::logic_error("unhandled weighting");
}

IterationRecord run_iteration(std::int64_t index, const ExperimentConfig& cfg,
                              const std::optional<DecisionMatrix>& injected) {
    const DecisionMatrix dm = injected ? *injected : iteration_matrix(index, cfg);
    const auto n = dm.rows();

    // Objective weights are shared between the GWO and hybrid weightings.
    std::map<std::pair<Method, TrafficClass>, WeightVector> objective_cache;
    auto objective = [&](Method m, TrafficClass tc) -> const WeightVector& {
        auto it = objective_cache.find({m, tc});
        if (it == objective_cache.end()) {
            GwoConfig g = cfg.gwo;
            g.seed = gwo_seed_for(index, cfg, m, tc);
            it = objective_cache.emplace(std::pair{m, tc}, gwo_optimize(dm, derive_limpo(tc), m, g).weights)
                     .first;
        }
        return it->second;
    };

    IterationRecord rec;
    for (const RrpKey& key : enumerate_keys(cfg)) {
        const bool uses_gwo = key.weighting == Weighting::Gwo || key.weighting == Weighting::BwmGwo;
        if (cfg.reweight_per_step && uses_gwo) {
            ScorerFactory factory = [&, key](const DecisionMatrix& sub) {
                const int step = static_cast<int>(n - sub.rows());
                const auto seed = gwo_seed_for(index, cfg, key.method, key.traffic_class, step);
                return scorer_for(key.method, compute_weights(sub, key.method, key.weighting,
                                                              key.traffic_class, cfg, seed));
            };
            rec.chains.push_back(run_removal_chain(dm, factory, key.removal, cfg.chain));
            continue;
        }
        WeightVector w = [&]() -> WeightVector {
            switch (key.weighting) {
                case Weighting::Ahp: return ahp_weights(key.traffic_class);
                case Weighting::Bwm: return bwm_weights(key.traffic_class);
                case Weighting::Gwo: return objective(key.method, key.traffic_class);
                case Weighting::BwmGwo:
                    return combine_weights(bwm_weights(key.traffic_class),
                                           objective(key.method, key.traffic_class), cfg.hybrid);
            }
            throw std::logic_error("unhandled weighting");
        }();
        rec.chains.push_back(run_removal_chain(dm, scorer_for(key.method, std::move(w)), key.removal,
                                               cfg.chain));
    }
    return rec;
}

std::vector<RrpStats> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto keys = enumerate_keys(cfg);

    auto empty_stats = [&] {
        std::vector<RrpStats> s;
        for (const auto& k : keys) s.push_back(RrpStats{k});
        return s;
    };

    const int workers = std::min(cfg.threads, cfg.iterations);
    std::vector<std::vector<RrpStats>> partial(static_cast<std::size_t>(workers), empty_stats());
    std::atomic<std::int64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&](std::vector<RrpStats>& acc) {
        try {
            for (std::int64_t it = next++; it < cfg.iterations; it = next++) {
                const IterationRecord rec = run_iteration(it, cfg);
                for (std::size_t k = 0; k < keys.size(); ++k) {
                    const ChainRecord& c = rec.chains[k];
                    acc[k].total_iterations += 1;
                    acc[k].iterations_with_reversal += c.reversals > 0 ? 1 : 0;
                    acc[k].reversal_steps += c.reversals;
                    acc[k].total_steps += c.steps;
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = cfg.iterations;
        }
    };

    if (workers == 1) {
        work(partial[0]);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, std::ref(partial[static_cast<std::size_t>(w)]));
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<RrpStats> total = empty_stats();
    for (const auto& p : partial) {
        for (std::size_t k = 0; k < keys.size(); ++k) {
            total[k].total_iterations += p[k].total_iterations;
            total[k].iterations_with_reversal += p[k].iterations_with_reversal;
            total[k].reversal_steps += p[k].reversal_steps;
            total[k].total_steps += p[k].total_steps;
        }
    }
    return total;
}

}  // namespace netsel
