#include <gtest/gtest.h>

#include <random>

#include "netsel/gwo.hpp"
#include "netsel/scenario.hpp"
#include "oracles.hpp"

using namespace netsel;

namespace {

Eigen::MatrixXd toy_matrix() {
    Eigen::MatrixXd x(5, 6);
    x << 7, 50, 6, 120, 15, 40,  //
        45, 60, 30, 80, 6, 55,   //
        42, 60, 70, 200, 9, 30,  //
        90, 70, 650, 4, 2, 10,   //
        9, 50, 3, 140, 18, 70;
    return x;
}

double grid_optimum3(const Eigen::MatrixXd& x, std::span<const Direction> dirs, Method method,
                     std::span<const int> important, std::span<const int> non_important) {
    const SpreadObjective sv(method, x, dirs);
    double best = -1.0;
    oracle::for_each_simplex3(0.05, [&](const std::vector<double>& w) {
        const Eigen::Vector3d wv(w[0], w[1], w[2]);
        if (ordering_violation(wv, important, non_important) > 0.0) return;
        best = std::max(best, sv(wv));
    });
    return best;
}

}  // namespace

TEST(Repair, ClampsAndNormalizes) {
    const Eigen::VectorXd r = repair_to_simplex(Eigen::Vector3d(-0.5, 2.0, 0.5));
    EXPECT_NEAR(r.sum(), 1.0, 1e-15);
    EXPECT_EQ(r(0), 0.0);
    EXPECT_NEAR(r(1), 2.0 / 3.0, 1e-15);
    const Eigen::VectorXd z = repair_to_simplex(Eigen::Vector3d(-1, -1, -1));
    EXPECT_NEAR(z(0), 1.0 / 3.0, 1e-15);
}

TEST(OrderingViolation, MinImportantAgainstMaxOther) {
    const std::vector<int> imp{0, 1}, non{2, 3};
    EXPECT_EQ(ordering_violation(Eigen::Vector4d(0.3, 0.3, 0.2, 0.2), imp, non), 0.0);
    EXPECT_EQ(ordering_violation(Eigen::Vector4d(0.25, 0.25, 0.25, 0.25), imp, non), 0.0);
    EXPECT_NEAR(ordering_violation(Eigen::Vector4d(0.4, 0.1, 0.3, 0.2), imp, non), 0.2, 1e-15);
}

TEST(GreyWolfPack, ScheduleAndLeaders) {
    GwoConfig cfg;
    cfg.iterations = 20;
    cfg.pack_size = 8;
    GreyWolfPack pack([](const Eigen::Ref<const Eigen::VectorXd>& w) { return w(0); }, 4, cfg);
    EXPECT_DOUBLE_EQ(pack.schedule_at(0), 2.0);
    EXPECT_DOUBLE_EQ(pack.schedule_at(20), 0.0);
    EXPECT_DOUBLE_EQ(pack.schedule_at(5) - pack.schedule_at(4), pack.schedule_at(11) - pack.schedule_at(10));
    while (!pack.done()) {
        const double before = pack.best().fitness;
        pack.step();
        const auto& l = pack.leaders();
        ASSERT_GE(l[0].fitness, l[1].fitness);
        ASSERT_GE(l[1].fitness, l[2].fitness);
        ASSERT_GE(pack.best().fitness, before);
        for (const auto& w : pack.wolves()) {
            ASSERT_NEAR(w.position.sum(), 1.0, 1e-12);
            ASSERT_TRUE((w.position.array() >= 0.0).all() && (w.position.array() <= 1.0).all());
        }
    }
    EXPECT_EQ(pack.iteration(), 20);
    // Maximizing w0 over the simplex drives it toward 1.
    EXPECT_GT(pack.best().position(0), 0.9);
}

TEST(GwoConfig, Validation) {
    GwoConfig cfg;
    cfg.pack_size = 3;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.pack_size = 4;
    cfg.iterations = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(GwoOptimize, FlatObjectiveStillFeasible) {
    const DecisionMatrix dm(Eigen::MatrixXd::Constant(2, 6, 5.0), std::vector<CandidateLabel>(2));
    const auto il = derive_limpo(TrafficClass::Streaming);
    for (Method m : {Method::Topsis, Method::Saw}) {
        const auto r = gwo_optimize(dm, il, m, GwoConfig{});
        EXPECT_NEAR(r.weights.values().sum(), 1.0, 1e-9);
        EXPECT_EQ(r.spread, 0.0);
        EXPECT_EQ(ordering_violation(r.weights.values(), il.important_indices(), il.non_important_indices()), 0.0);
    }
}

TEST(GwoOptimize, ReproducibleMonotoneAndBeatsUniform) {
    const DecisionMatrix dm(toy_matrix(), std::vector<CandidateLabel>(5));
    const auto il = derive_limpo(TrafficClass::Conversational);
    GwoConfig cfg;
    cfg.seed = 42;
    for (Method m : {Method::Topsis, Method::Saw}) {
        const auto a = gwo_optimize(dm, il, m, cfg);
        const auto b = gwo_optimize(dm, il, m, cfg);
        EXPECT_EQ(a.weights, b.weights);
        EXPECT_EQ(a.trace, b.trace);
        ASSERT_EQ(a.trace.size(), 101u);
        for (std::size_t k = 1; k < a.trace.size(); ++k) EXPECT_GE(a.trace[k], a.trace[k - 1]);
        EXPECT_EQ(a.violation, 0.0);
        const double uniform =
            m == Method::Topsis ? sv_topsis(dm, WeightVector::uniform(6)) : sv_saw(dm, WeightVector::uniform(6));
        EXPECT_GE(a.spread, uniform);
    }
}

TEST(GwoOptimize, DifferentSeedsDiffer) {
    const DecisionMatrix dm(toy_matrix(), std::vector<CandidateLabel>(5));
    const auto il = derive_limpo(TrafficClass::Background);
    GwoConfig a, b;
    a.seed = 1;
    b.seed = 2;
    a.iterations = b.iterations = 3;
    EXPECT_NE(gwo_optimize(dm, il, Method::Topsis, a).trace, gwo_optimize(dm, il, Method::Topsis, b).trace);
}

TEST(GwoOptimize, NearGridOptimumOnThreeCriteria) {
    Eigen::MatrixXd x(3, 3);
    x << 3, 20, 7,  //
        9, 5, 2,    //
        5, 11, 4;
    const std::vector<Direction> dirs{Direction::Benefit, Direction::Cost, Direction::Cost};
    const std::vector<int> none;
    const std::vector<int> imp{0, 2}, non{1};
    for (Method m : {Method::Topsis, Method::Saw}) {
        GwoConfig cfg;
        cfg.seed = 5;
        const auto free = gwo_optimize(x, dirs, none, none, m, cfg);
        EXPECT_GE(free.spread, 0.95 * grid_optimum3(x, dirs, m, none, none));
        const auto constrained = gwo_optimize(x, dirs, imp, non, m, cfg);
        EXPECT_EQ(constrained.violation, 0.0);
        EXPECT_GE(constrained.spread, 0.95 * grid_optimum3(x, dirs, m, imp, non));
    }
}

TEST(GwoOptimize, ScenarioOutputsAlwaysFeasible) {
    ScenarioConfig sc;
    RandomStream stream(77);
    for (int trial = 0; trial < 20; ++trial) {
        const DecisionMatrix dm = generate_networks(sc, stream);
        for (TrafficClass tc : kTrafficClasses) {
            const auto il = derive_limpo(tc);
            GwoConfig cfg;
            cfg.seed = static_cast<std::uint64_t>(trial);
            cfg.iterations = 30;
            const auto r = gwo_optimize(dm, il, trial % 2 ? Method::Saw : Method::Topsis, cfg);
            ASSERT_EQ(ordering_violation(r.weights.values(), il.important_indices(), il.non_important_indices()),
                      0.0);
            ASSERT_NEAR(r.weights.values().sum(), 1.0, 1e-9);
        }
    }
}
