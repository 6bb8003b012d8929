#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "netsel/madm.hpp"
#include "netsel/model.hpp"

namespace netsel {

/// Published AHP weights per traffic class, order (CB, S, DR, D, J, PLR).
/// Returned verbatim; the printed rows sum to 0.996..0.998.
WeightVector ahp_weights(TrafficClass tc);

/// Criteria ordered most important first, split into an important head of
/// length `important_count` and the non-important tail.
class ImportanceList {
public:
    static constexpr std::size_t kDefaultImportant = 3;

    explicit ImportanceList(std::vector<AttributeId> limpo,
                            std::size_t important_count = kDefaultImportant);

    const std::vector<AttributeId>& limpo() const noexcept { return limpo_; }
    std::span<const AttributeId> important() const {
        return std::span(limpo_).first(important_count_);
    }
    std::span<const AttributeId> non_important() const {
        return std::span(limpo_).subspan(important_count_);
    }
    std::vector<int> important_indices() const;
    std::vector<int> non_important_indices() const;

private:
    std::vector<AttributeId> limpo_;
    std::size_t important_count_;
};

/// AHP row of the class sorted descending (stable on ties).
ImportanceList derive_limpo(TrafficClass tc);

class BwmError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Best-to-others and others-to-worst preference vectors on the 1..9 scale.
/// Indices refer to criterion columns; any M >= 2 is accepted.
struct BwmComparisons {
    int best = 0;
    int worst = 0;
    std::vector<int> a_best;
    std::vector<int> a_worst;

    /// Throws BwmError unless a_best[best] = a_worst[worst] = 1, entries lie
    /// in 1..9, a_best[worst] is the max of a_best and a_worst[best] the max
    /// of a_worst.
    void validate() const;
};

BwmComparisons bwm_vectors(const ImportanceList& il);

struct BwmSolution {
    WeightVector w_star;
    double xi_star = 0.0;
};

/// Solves min xi s.t. |w_B - a_Bj w_j| <= xi, |w_j - a_jW w_W| <= xi,
/// sum w = 1, w >= 0 as a linear program.
BwmSolution solve_bwm(const BwmComparisons& cmp);

/// max_j max(|w_B - a_Bj w_j|, |w_j - a_jW w_W|) for an arbitrary weight vector.
double bwm_residual(const BwmComparisons& cmp, const Eigen::Ref<const Eigen::VectorXd>& w);

/// Spread objective: sum over candidate pairs of the absolute score gap.
double sv_topsis(const Eigen::Ref<const Eigen::MatrixXd>& dm, const Eigen::Ref<const Eigen::VectorXd>& w,
                 std::span<const Direction> dirs);
double sv_saw(const Eigen::Ref<const Eigen::MatrixXd>& dm, const Eigen::Ref<const Eigen::VectorXd>& w,
              std::span<const Direction> dirs);

inline double sv_topsis(const DecisionMatrix& dm, const WeightVector& w) {
    return sv_topsis(dm.values(), w.values(), kDirections);
}
inline double sv_saw(const DecisionMatrix& dm, const WeightVector& w) {
    return sv_saw(dm.values(), w.values(), kDirections);
}

/// Caches the method's normalization of a fixed matrix so the spread can be
/// evaluated for many weight vectors.
class SpreadObjective {
public:
    SpreadObjective(Method method, const Eigen::Ref<const Eigen::MatrixXd>& dm,
                    std::span<const Direction> dirs);

    double operator()(const Eigen::Ref<const Eigen::VectorXd>& w) const;
    Eigen::Index criteria() const noexcept { return nm_.values.cols(); }
    Method method() const noexcept { return method_; }

private:
    Method method_;
    NormalizedMatrix<double> nm_;
    std::vector<Direction> dirs_;
};

struct HybridParams {
    double alpha = 0.2;  // subjective share
    double beta = 0.8;   // objective share

    void validate() const;
};

class HybridParamsError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// alpha * ws + beta * wo. Throws HybridParamsError unless alpha, beta >= 0
/// and alpha + beta = 1 (within 1e-12).
WeightVector combine_weights(const WeightVector& ws, const WeightVector& wo, const HybridParams& hp);

}  // namespace netsel
