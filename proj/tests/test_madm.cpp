#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "netsel/madm.hpp"
#include "oracles.hpp"

using namespace netsel;

namespace {

const std::vector<Direction> kTwoBenefit{Direction::Benefit, Direction::Benefit};

Eigen::MatrixXd random_matrix(std::mt19937_64& gen, int n, int m) {
    std::uniform_real_distribution<double> u(0.5, 100.0);
    Eigen::MatrixXd x(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) x(i, j) = u(gen);
    return x;
}

Eigen::VectorXd random_weights(std::mt19937_64& gen, int m) {
    std::exponential_distribution<double> e(1.0);
    Eigen::VectorXd w(m);
    for (int j = 0; j < m; ++j) w(j) = e(gen);
    return w / w.sum();
}

oracle::Table to_table(const Eigen::MatrixXd& x) {
    oracle::Table t(static_cast<std::size_t>(x.rows()), oracle::Row(static_cast<std::size_t>(x.cols())));
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) t[i][j] = x(i, j);
    return t;
}

std::vector<bool> benefit_mask(std::span<const Direction> d) {
    std::vector<bool> b;
    for (auto x : d) b.push_back(x == Direction::Benefit);
    return b;
}

}  // namespace

TEST(NormalizeTopsis, PythagoreanColumn) {
    Eigen::MatrixXd x(2, 3);
    x << 3, 1, 2, 4, 0, 2;
    const auto nm = normalize_topsis(x);
    EXPECT_EQ(nm.source, Normalization::TopsisVector);
    EXPECT_NEAR(nm.values(0, 0), 0.6, 1e-15);
    EXPECT_NEAR(nm.values(1, 0), 0.8, 1e-15);
    EXPECT_EQ(nm.values(0, 1), 1.0);
    EXPECT_EQ(nm.values(1, 1), 0.0);
    EXPECT_NEAR(nm.values(0, 2), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(nm.values(1, 2), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(NormalizeTopsis, ZeroColumnRejected) {
    Eigen::MatrixXd x(2, 2);
    x << 1, 0, 2, 0;
    try {
        normalize_topsis(x);
        FAIL();
    } catch (const MadmError& e) {
        EXPECT_EQ(e.kind(), MadmError::Kind::ZeroColumn);
        EXPECT_EQ(e.col(), 1);
    }
}

TEST(NormalizeTopsis, WorksForFloatExpressions) {
    Eigen::MatrixXf x(2, 1);
    x << 3.0f, 4.0f;
    const auto nm = normalize_topsis(x * 2.0f);
    static_assert(std::is_same_v<decltype(nm.values)::Scalar, float>);
    EXPECT_NEAR(nm.values(1, 0), 0.8f, 1e-6f);
}

TEST(NormalizeSaw, BenefitAndCostColumns) {
    Eigen::MatrixXd x(2, 2);
    x << 2, 1, 6, 3;
    const std::vector<Direction> dirs{Direction::Benefit, Direction::Cost};
    const auto nm = normalize_saw(x, dirs);
    EXPECT_NEAR(nm.values(0, 0), 0.25, 1e-15);
    EXPECT_NEAR(nm.values(1, 0), 0.75, 1e-15);
    EXPECT_NEAR(nm.values(0, 1), 4.0, 1e-15);
    EXPECT_NEAR(nm.values(1, 1), 4.0 / 3.0, 1e-15);

    const auto uniform = normalize_saw(Eigen::MatrixXd::Ones(4, 1), std::vector{Direction::Benefit});
    for (int i = 0; i < 4; ++i) EXPECT_EQ(uniform.values(i, 0), 0.25);
}

TEST(NormalizeSaw, DivisionByZero) {
    Eigen::MatrixXd x(2, 1);
    x << 0, 3;
    EXPECT_THROW(normalize_saw(x, std::vector{Direction::Cost}), MadmError);
    EXPECT_THROW(normalize_saw(Eigen::MatrixXd::Zero(2, 1), std::vector{Direction::Benefit}), MadmError);
}

TEST(TopsisRank, DominatingAlternativeScoresOne) {
    Eigen::MatrixXd x(3, 3);
    // Column 0 benefit, columns 1-2 cost; row 1 is best everywhere.
    x << 2, 5, 5, 9, 1, 1, 4, 3, 2;
    const std::vector<Direction> dirs{Direction::Benefit, Direction::Cost, Direction::Cost};
    const auto [ranking, dist] = topsis_rank(normalize_topsis(x), WeightVector({0.2, 0.3, 0.5}), dirs);
    EXPECT_EQ(ranking.order.front(), 1);
    EXPECT_EQ(ranking.scores(1), 1.0);
    EXPECT_EQ(dist.s_plus(1), 0.0);
    EXPECT_TRUE((dist.s_minus.array() >= 0.0).all());
}

TEST(TopsisRank, IdenticalRowsTieByIndex) {
    Eigen::MatrixXd x(3, 2);
    x << 1, 2, 3, 4, 1, 2;
    const auto [ranking, dist] = topsis_rank(normalize_topsis(x), WeightVector({0.5, 0.5}), kTwoBenefit);
    EXPECT_EQ(ranking.scores(0), ranking.scores(2));
    const auto pos0 = std::find(ranking.order.begin(), ranking.order.end(), 0);
    const auto pos2 = std::find(ranking.order.begin(), ranking.order.end(), 2);
    EXPECT_LT(pos0, pos2);
}

TEST(TopsisRank, AllIdenticalScoreHalf) {
    const auto [ranking, dist] =
        topsis_rank(normalize_topsis(Eigen::MatrixXd::Constant(3, 2, 7.0)), WeightVector({0.5, 0.5}), kTwoBenefit);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(ranking.scores(i), 0.5);
    EXPECT_EQ(ranking.order, (std::vector<int>{0, 1, 2}));
}

TEST(TopsisRank, ThreeByTwoBenefitCase) {
    // Expected values from oracle::topsis on the same input: (0.5, 0.5, 1).
    Eigen::MatrixXd x(3, 2);
    x << 1, 0, 0, 1, 1, 1;
    const auto [ranking, dist] = topsis_rank(normalize_topsis(x), WeightVector({0.5, 0.5}), kTwoBenefit);
    EXPECT_EQ(ranking.order.front(), 2);
    EXPECT_NEAR(ranking.scores(2), 1.0, 1e-15);
    EXPECT_NEAR(ranking.scores(0), 0.5, 1e-15);
    EXPECT_EQ(ranking.scores(0), ranking.scores(1));
    const auto o = oracle::topsis(to_table(x), {0.5, 0.5}, {true, true});
    EXPECT_NEAR(o[0], 0.5, 1e-15);
    EXPECT_NEAR(o[2], 1.0, 1e-15);
}

TEST(SawRank, HandDotProducts) {
    NormalizedMatrix<double> nm{Eigen::MatrixXd(2, 2), Normalization::SawRatio};
    nm.values << 0.25, 0.75, 0.75, 0.25;
    const Ranking r = saw_rank(nm, WeightVector({0.8, 0.2}));
    EXPECT_NEAR(r.scores(0), 0.35, 1e-15);
    EXPECT_NEAR(r.scores(1), 0.65, 1e-15);
    EXPECT_EQ(r.order, (std::vector<int>{1, 0}));
}

TEST(SawRank, SingleCandidateAndUniformRows) {
    NormalizedMatrix<double> one{Eigen::MatrixXd(1, 2), Normalization::SawRatio};
    one.values << 0.4, 2.0;
    const Ranking r1 = saw_rank(one, WeightVector({0.5, 0.5}));
    EXPECT_NEAR(r1.scores(0), 1.2, 1e-15);
    EXPECT_EQ(r1.order, (std::vector<int>{0}));

    NormalizedMatrix<double> flat{Eigen::MatrixXd::Constant(3, 2, 0.3), Normalization::SawRatio};
    const Ranking r2 = saw_rank(flat, WeightVector({0.1, 0.9}));
    EXPECT_EQ(r2.scores(0), r2.scores(1));
    EXPECT_EQ(r2.scores(1), r2.scores(2));
}

TEST(Madm, DimensionMismatchIsReported) {
    const auto nm = normalize_topsis(Eigen::MatrixXd::Ones(2, 3));
    EXPECT_THROW(topsis_scores(nm, Eigen::Vector2d(0.5, 0.5), kTwoBenefit), MadmError);
}

TEST(MadmProperties, NormalizationInvariants) {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const Eigen::MatrixXd x = random_matrix(gen, 2 + trial % 7, 6);
        const auto t = normalize_topsis(x);
        for (Eigen::Index j = 0; j < 6; ++j) ASSERT_NEAR(t.values.col(j).norm(), 1.0, 1e-9);
        const auto s = normalize_saw(x, kDirections);
        for (Eigen::Index j = 0; j < 6; ++j) {
            if (kDirections[static_cast<std::size_t>(j)] == Direction::Benefit) {
                ASSERT_NEAR(s.values.col(j).sum(), 1.0, 1e-9);
                ASSERT_TRUE((s.values.col(j).array() >= 0.0).all() && (s.values.col(j).array() <= 1.0).all());
            } else {
                ASSERT_TRUE((s.values.col(j).array() >= 1.0).all());
            }
        }
    }
}

TEST(MadmProperties, ScoresBoundedAndScaleInvariant) {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> lambda(0.01, 100.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const Eigen::MatrixXd x = random_matrix(gen, 2 + trial % 6, 6);
        const Eigen::VectorXd w = random_weights(gen, 6);
        const auto ts = method_scores(Method::Topsis, x, w, kDirections);
        const auto ss = method_scores(Method::Saw, x, w, kDirections);
        ASSERT_TRUE((ts.array() >= 0.0).all() && (ts.array() <= 1.0).all());
        ASSERT_TRUE((ss.array() >= 0.0).all());

        Eigen::MatrixXd scaled = x;
        scaled.col(trial % 6) *= lambda(gen);
        ASSERT_EQ(make_ranking(method_scores(Method::Topsis, scaled, w, kDirections), Method::Topsis).order,
                  make_ranking(ts, Method::Topsis).order);
        ASSERT_EQ(make_ranking(method_scores(Method::Saw, scaled, w, kDirections), Method::Saw).order,
                  make_ranking(ss, Method::Saw).order);
    }
}

TEST(MadmProperties, DuplicateAlternativeAgainstOracle) {
    // Appending a copy of an existing row; library and oracle must agree on
    // the induced order of the original candidates.
    std::mt19937_64 gen(5);
    const std::vector<bool> benefit = benefit_mask(kDirections);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 3;
        const Eigen::MatrixXd x = random_matrix(gen, n, 6);
        const Eigen::VectorXd w = random_weights(gen, 6);
        Eigen::MatrixXd dup(n + 1, 6);
        dup << x, x.row(trial % n);
        const auto lib = make_ranking(method_scores(Method::Topsis, dup, w, kDirections), Method::Topsis);
        auto o = oracle::topsis(to_table(dup), {w.data(), w.data() + 6}, benefit);
        Eigen::VectorXd os = Eigen::Map<Eigen::VectorXd>(o.data(), n + 1);
        const auto ref = make_ranking(os, Method::Topsis);
        std::vector<int> lib_orig, ref_orig;
        for (int i : lib.order)
            if (i < n) lib_orig.push_back(i);
        for (int i : ref.order)
            if (i < n) ref_orig.push_back(i);
        ASSERT_EQ(lib_orig, ref_orig);
    }
}

TEST(MadmProperties, MatchesStraightLineOracle) {
    std::mt19937_64 gen(2024);
    const std::vector<bool> benefit = benefit_mask(kDirections);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::MatrixXd x = random_matrix(gen, 5, 6);
        const Eigen::VectorXd w = random_weights(gen, 6);
        const std::vector<double> wv(w.data(), w.data() + 6);
        const auto ot = oracle::topsis(to_table(x), wv, benefit);
        const auto os = oracle::saw(to_table(x), wv, benefit);
        const auto lt = method_scores(Method::Topsis, x, w, kDirections);
        const auto ls = method_scores(Method::Saw, x, w, kDirections);
        for (int i = 0; i < 5; ++i) {
            ASSERT_NEAR(lt(i), ot[static_cast<std::size_t>(i)], 1e-12);
            ASSERT_NEAR(ls(i), os[static_cast<std::size_t>(i)], 1e-12);
        }
    }
}
