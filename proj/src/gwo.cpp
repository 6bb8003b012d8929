#include "netsel/gwo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace netsel {

void GwoConfig::validate() const {
    if (pack_size < 4) throw std::invalid_argument("GWO pack size must be at least 4");
    if (iterations < 1) throw std::invalid_argument("GWO needs at least one iteration");
    if (!(penalty_coeff > 0.0)) throw std::invalid_argument("GWO penalty coefficient must be positive");
}

Eigen::VectorXd repair_to_simplex(Eigen::VectorXd x) {
    x = x.cwiseMax(0.0).cwiseMin(1.0);
    const double s = x.sum();
    if (!(s > 0.0)) return Eigen::VectorXd::Constant(x.size(), 1.0 / static_cast<double>(x.size()));
    return x / s;
}

double ordering_violation(const Eigen::Ref<const Eigen::VectorXd>& w, std::span<const int> important,
                          std::span<const int> non_important) {
    if (important.empty() || non_important.empty()) return 0.0;
    double lightest_important = std::numeric_limits<double>::infinity();
    double heaviest_other = -std::numeric_limits<double>::infinity();
    for (int i : important) lightest_important = std::min(lightest_important, w(i));
    for (int i : non_important) heaviest_other = std::max(heaviest_other, w(i));
    return std::max(0.0, heaviest_other - lightest_important);
}

ConstrainedSpread::ConstrainedSpread(SpreadObjective objective, std::vector<int> important,
                                     std::vector<int> non_important, double penalty_coeff)
    : objective_(std::move(objective)),
      important_(std::move(important)),
      non_important_(std::move(non_important)),
      penalty_coeff_(penalty_coeff) {}

double ConstrainedSpread::violation(const Eigen::Ref<const Eigen::VectorXd>& w) const {
    return ordering_violation(w, important_, non_important_);
}

double ConstrainedSpread::operator()(const Eigen::Ref<const Eigen::VectorXd>& w) const {
    const double v = violation(w);
    if (v > 0.0) return -penalty_coeff_ * v;
    return objective_(w);
}

GreyWolfPack::GreyWolfPack(Fitness fitness, Eigen::Index dimension, const GwoConfig& cfg)
    : fitness_(std::move(fitness)), cfg_(cfg), rng_(cfg.seed) {
    cfg_.validate();
    wolves_.reserve(static_cast<std::size_t>(cfg_.pack_size));
    for (int k = 0; k < cfg_.pack_size; ++k) {
        // Normalized exponentials are uniform on the simplex.
        Eigen::VectorXd x(dimension);
        for (Eigen::Index d = 0; d < dimension; ++d) x(d) = -std::log(1.0 - rng_.uniform());
        x = repair_to_simplex(x);
        const double f = fitness_(x);
        wolves_.push_back(Wolf{std::move(x), f});
    }
    for (auto& l : leaders_) l.fitness = -std::numeric_limits<double>::infinity();
    update_leaders();
}

void GreyWolfPack::update_leaders() {
    std::vector<const Wolf*> pool;
    for (const auto& l : leaders_)
        if (l.position.size() > 0) pool.push_back(&l);
    for (const auto& w : wolves_) pool.push_back(&w);
    std::stable_sort(pool.begin(), pool.end(),
                     [](const Wolf* a, const Wolf* b) { return a->fitness > b->fitness; });

    std::array<Wolf, 3> next;
    std::size_t filled = 0;
    for (const Wolf* w : pool) {
        if (filled == next.size()) break;
        const bool duplicate = std::any_of(next.begin(), next.begin() + static_cast<long>(filled),
                                           [&](const Wolf& l) { return l.position == w->position; });
        if (!duplicate) next[filled++] = *w;
    }
    // Degenerate packs where fewer than three distinct positions exist.
    for (std::size_t i = filled; i < next.size(); ++i) next[i] = next[filled - 1];
    leaders_ = std::move(next);
}

void GreyWolfPack::step() {
    if (done()) return;
    const double a = schedule();
    const Eigen::Index dim = wolves_.front().position.size();
    for (auto& wolf : wolves_) {
        Eigen::VectorXd next = Eigen::VectorXd::Zero(dim);
        for (const auto& leader : leaders_) {
            for (Eigen::Index d = 0; d < dim; ++d) {
                const double big_a = 2.0 * a * rng_.uniform() - a;
                const double big_c = 2.0 * rng_.uniform();
                const double dist = std::abs(big_c * leader.position(d) - wolf.position(d));
                next(d) += leader.position(d) - big_a * dist;
            }
        }
        wolf.position = repair_to_simplex(next / 3.0);
        wolf.fitness = fitness_(wolf.position);
    }
    ++t_;
    update_leaders();
}

GwoResult gwo_optimize(const Eigen::Ref<const Eigen::MatrixXd>& dm, std::span<const Direction> dirs,
                       std::span<const int> important, std::span<const int> non_important,
                       Method method, const GwoConfig& cfg) {
    cfg.validate();
    const ConstrainedSpread fitness(SpreadObjective(method, dm, dirs),
                                    {important.begin(), important.end()},
                                    {non_important.begin(), non_important.end()}, cfg.penalty_coeff);
    GreyWolfPack pack([&](const Eigen::Ref<const Eigen::VectorXd>& w) { return fitness(w); },
                      dm.cols(), cfg);

    std::vector<double> trace;
    trace.reserve(static_cast<std::size_t>(cfg.iterations) + 1);
    trace.push_back(pack.best().fitness);
    while (!pack.done()) {
        pack.step();
        trace.push_back(pack.best().fitness);
    }

    Eigen::VectorXd best = pack.best().position;
    double violation = fitness.violation(best);
    if (violation > 0.0) {
        // Never found a feasible point; uniform weights always satisfy the ordering.
        best = Eigen::VectorXd::Constant(dm.cols(), 1.0 / static_cast<double>(dm.cols()));
        violation = 0.0;
    }
    const double spread = fitness.spread(best);
    const double final_fitness = fitness(best);
    return GwoResult{WeightVector(best), final_fitness, spread, violation, std::move(trace)};
}

GwoResult gwo_optimize(const DecisionMatrix& dm, const ImportanceList& il, Method method,
                       const GwoConfig& cfg) {
    return gwo_optimize(dm.values(), kDirections, il.important_indices(), il.non_important_indices(),
                        method, cfg);
}

}  // namespace netsel
