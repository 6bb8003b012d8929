#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netsel/model.hpp"
#include "netsel/random.hpp"
#include "netsel/weighting.hpp"

namespace netsel {

struct GwoConfig {
    int pack_size = 30;
    int iterations = 100;
    std::uint64_t seed = 1;
    double penalty_coeff = 10.0;

    void validate() const;
};

/// Projects onto the weight simplex the cheap way: clamp to [0, 1], then
/// rescale to unit sum. An all-zero vector becomes uniform.
Eigen::VectorXd repair_to_simplex(Eigen::VectorXd x);

/// Amount by which the heaviest non-important weight exceeds the lightest
/// important weight (zero when every important criterion dominates).
double ordering_violation(const Eigen::Ref<const Eigen::VectorXd>& w, std::span<const int> important,
                          std::span<const int> non_important);

/// Fitness to maximize over weight vectors. Feasible points score their
/// spread (>= 0); infeasible points score -penalty_coeff * violation, so
/// any feasible point beats any infeasible one.
class ConstrainedSpread {
public:
    ConstrainedSpread(SpreadObjective objective, std::vector<int> important,
                      std::vector<int> non_important, double penalty_coeff);

    double operator()(const Eigen::Ref<const Eigen::VectorXd>& w) const;
    double violation(const Eigen::Ref<const Eigen::VectorXd>& w) const;
    double spread(const Eigen::Ref<const Eigen::VectorXd>& w) const { return objective_(w); }
    Eigen::Index dimension() const noexcept { return objective_.criteria(); }

private:
    SpreadObjective objective_;
    std::vector<int> important_;
    std::vector<int> non_important_;
    double penalty_coeff_;
};

struct Wolf {
    Eigen::VectorXd position;
    double fitness = 0.0;
};

/// Pack state for one optimization run. Leaders are the three best positions
/// seen so far (alpha, beta, delta), kept sorted by fitness.
class GreyWolfPack {
public:
    using Fitness = std::function<double(const Eigen::Ref<const Eigen::VectorXd>&)>;

    GreyWolfPack(Fitness fitness, Eigen::Index dimension, const GwoConfig& cfg);

    /// a(t) = 2 (1 - t / iterations).
    double schedule() const noexcept { return schedule_at(t_); }
    double schedule_at(int t) const noexcept {
        return 2.0 * (1.0 - static_cast<double>(t) / cfg_.iterations);
    }

    int iteration() const noexcept { return t_; }
    bool done() const noexcept { return t_ >= cfg_.iterations; }
    const std::vector<Wolf>& wolves() const noexcept { return wolves_; }
    const std::array<Wolf, 3>& leaders() const noexcept { return leaders_; }
    const Wolf& best() const noexcept { return leaders_[0]; }

    /// Moves every wolf toward the three leaders, repairs, re-evaluates and
    /// refreshes the leaders.
    void step();

private:
    void update_leaders();

    Fitness fitness_;
    GwoConfig cfg_;
    RandomStream rng_;
    std::vector<Wolf> wolves_;
    std::array<Wolf, 3> leaders_;
    int t_ = 0;
};

struct GwoResult {
    WeightVector weights;
    double fitness = 0.0;
    double spread = 0.0;
    double violation = 0.0;
    std::vector<double> trace;  // best-so-far fitness after init and each iteration
};

/// Objective weights maximizing the ranking-score spread of `dm` under the
/// importance-ordering constraint.
GwoResult gwo_optimize(const Eigen::Ref<const Eigen::MatrixXd>& dm, std::span<const Direction> dirs,
                       std::span<const int> important, std::span<const int> non_important,
                       Method method, const GwoConfig& cfg);

GwoResult gwo_optimize(const DecisionMatrix& dm, const ImportanceList& il, Method method,
                       const GwoConfig& cfg);

}  // namespace netsel
