#pragma once

// TOPSIS and SAW normalization, scoring and ranking.
//
// Functions accept any dense Eigen expression with one row per alternative and
// one column per criterion; the scalar type follows the input. Criterion
// directions are passed separately so the same code serves the six-attribute
// network problem and small hand-built cases.

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "netsel/model.hpp"

namespace netsel {

class MadmError : public std::runtime_error {
public:
    enum class Kind { ZeroColumn, DivisionByZero, DimensionMismatch };

    MadmError(Kind kind, Eigen::Index col, const std::string& what)
        : std::runtime_error(what), kind_(kind), col_(col) {}

    Kind kind() const noexcept { return kind_; }
    Eigen::Index col() const noexcept { return col_; }

private:
    Kind kind_;
    Eigen::Index col_;
};

enum class Normalization { TopsisVector, SawRatio };

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct NormalizedMatrix {
    MatrixX<Scalar> values;
    Normalization source = Normalization::TopsisVector;
};

template <typename Scalar>
struct TopsisDistances {
    VectorX<Scalar> s_plus;   // to the ideal point
    VectorX<Scalar> s_minus;  // to the negative-ideal point
};

namespace detail {

inline void require_directions(Eigen::Index cols, std::span<const Direction> dirs) {
    if (static_cast<Eigen::Index>(dirs.size()) != cols)
        throw MadmError(MadmError::Kind::DimensionMismatch, -1,
                        "expected " + std::to_string(cols) + " criterion directions, got " +
                            std::to_string(dirs.size()));
}

template <typename Derived>
void require_weights(Eigen::Index cols, const Eigen::MatrixBase<Derived>& w) {
    if (w.size() != cols)
        throw MadmError(MadmError::Kind::DimensionMismatch, -1,
                        "expected " + std::to_string(cols) + " weights, got " +
                            std::to_string(w.size()));
}

}  // namespace detail

/// Vector normalization: each column divided by its Euclidean norm.
template <typename Derived>
NormalizedMatrix<typename Derived::Scalar> normalize_topsis(const Eigen::MatrixBase<Derived>& dm) {
    using Scalar = typename Derived::Scalar;
    NormalizedMatrix<Scalar> nm{dm.eval(), Normalization::TopsisVector};
    for (Eigen::Index j = 0; j < nm.values.cols(); ++j) {
        const Scalar norm = nm.values.col(j).norm();
        if (norm == Scalar(0))
            throw MadmError(MadmError::Kind::ZeroColumn, j,
                            "column " + std::to_string(j) + " has zero norm");
        nm.values.col(j) /= norm;
    }
    return nm;
}

/// Ratio normalization: benefit entries become value / column-sum, cost
/// entries column-sum / value. Cost entries are not rescaled and may exceed 1.
template <typename Derived>
NormalizedMatrix<typename Derived::Scalar> normalize_saw(const Eigen::MatrixBase<Derived>& dm,
                                                         std::span<const Direction> dirs) {
    using Scalar = typename Derived::Scalar;
    detail::require_directions(dm.cols(), dirs);
    NormalizedMatrix<Scalar> nm{dm.eval(), Normalization::SawRatio};
    for (Eigen::Index j = 0; j < nm.values.cols(); ++j) {
        const Scalar sum = nm.values.col(j).sum();
        if (dirs[static_cast<std::size_t>(j)] == Direction::Benefit) {
            if (sum == Scalar(0))
                throw MadmError(MadmError::Kind::DivisionByZero, j,
                                "benefit column " + std::to_string(j) + " sums to zero");
            nm.values.col(j) /= sum;
        } else {
            if ((nm.values.col(j).array() == Scalar(0)).any())
                throw MadmError(MadmError::Kind::DivisionByZero, j,
                                "cost column " + std::to_string(j) + " has a zero entry");
            nm.values.col(j) = nm.values.col(j).cwiseInverse() * sum;
        }
    }
    return nm;
}

/// Euclidean distances of the weighted rows to the ideal and negative-ideal
/// points. Benefit columns take the column max as ideal, cost columns the min.
template <typename Scalar, typename WDerived>
TopsisDistances<Scalar> topsis_distances(const NormalizedMatrix<Scalar>& nm,
                                         const Eigen::MatrixBase<WDerived>& w,
                                         std::span<const Direction> dirs) {
    const auto& m = nm.values;
    detail::require_directions(m.cols(), dirs);
    detail::require_weights(m.cols(), w);
    const MatrixX<Scalar> v = m * w.template cast<Scalar>().asDiagonal();
    VectorX<Scalar> ideal(v.cols());
    VectorX<Scalar> anti(v.cols());
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
        const Scalar hi = v.col(j).maxCoeff();
        const Scalar lo = v.col(j).minCoeff();
        const bool benefit = dirs[static_cast<std::size_t>(j)] == Direction::Benefit;
        ideal(j) = benefit ? hi : lo;
        anti(j) = benefit ? lo : hi;
    }
    TopsisDistances<Scalar> d;
    d.s_plus = (v.rowwise() - ideal.transpose()).rowwise().norm();
    d.s_minus = (v.rowwise() - anti.transpose()).rowwise().norm();
    return d;
}

/// Relative closeness S- / (S- + S+). A row sitting on both reference points
/// (only possible when every alternative is identical) scores 0.5.
template <typename Scalar>
VectorX<Scalar> topsis_closeness(const TopsisDistances<Scalar>& d) {
    VectorX<Scalar> score(d.s_plus.size());
    for (Eigen::Index i = 0; i < score.size(); ++i) {
        const Scalar denom = d.s_minus(i) + d.s_plus(i);
        score(i) = denom == Scalar(0) ? Scalar(0.5) : d.s_minus(i) / denom;
    }
    return score;
}

template <typename Scalar, typename WDerived>
VectorX<Scalar> topsis_scores(const NormalizedMatrix<Scalar>& nm,
                              const Eigen::MatrixBase<WDerived>& w,
                              std::span<const Direction> dirs) {
    return topsis_closeness(topsis_distances(nm, w, dirs));
}

/// Weighted sum of the normalized rows.
template <typename Scalar, typename WDerived>
VectorX<Scalar> saw_scores(const NormalizedMatrix<Scalar>& nm, const Eigen::MatrixBase<WDerived>& w) {
    detail::require_weights(nm.values.cols(), w);
    return nm.values * w.template cast<Scalar>();
}

inline std::pair<Ranking, TopsisDistances<double>> topsis_rank(const NormalizedMatrix<double>& nm,
                                                               const WeightVector& w,
                                                               std::span<const Direction> dirs) {
    auto d = topsis_distances(nm, w.values(), dirs);
    return {make_ranking(topsis_closeness(d), Method::Topsis), std::move(d)};
}

inline Ranking saw_rank(const NormalizedMatrix<double>& nm, const WeightVector& w) {
    return make_ranking(saw_scores(nm, w.values()), Method::Saw);
}

/// Normalize with the method's own scheme, then score.
template <typename Derived, typename WDerived>
VectorX<typename Derived::Scalar> method_scores(Method method, const Eigen::MatrixBase<Derived>& dm,
                                                const Eigen::MatrixBase<WDerived>& w,
                                                std::span<const Direction> dirs) {
    if (method == Method::Topsis) return topsis_scores(normalize_topsis(dm), w, dirs);
    return saw_scores(normalize_saw(dm, dirs), w);
}

inline Ranking rank(Method method, const DecisionMatrix& dm, const WeightVector& w) {
    return make_ranking(method_scores(method, dm.values(), w.values(), kDirections), method);
}

/// Sum over unordered pairs of |score_i - score_j|.
template <typename Derived>
typename Derived::Scalar pairwise_spread(const Eigen::MatrixBase<Derived>& scores) {
    using Scalar = typename Derived::Scalar;
    Scalar sv(0);
    for (Eigen::Index i = 0; i < scores.size(); ++i)
        for (Eigen::Index j = i + 1; j < scores.size(); ++j) sv += std::abs(scores(i) - scores(j));
    return sv;
}

}  // namespace netsel
