#include "netsel/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "netsel/lp.hpp"

namespace netsel {

WeightVector ahp_weights(TrafficClass tc) {
    Eigen::VectorXd w(6);
    switch (tc) {
        case TrafficClass::Conversational: w << 0.036, 0.124, 0.104, 0.325, 0.307, 0.102; break;
        case TrafficClass::Background:     w << 0.085, 0.155, 0.441, 0.051, 0.079, 0.186; break;
        case TrafficClass::Interactive:    w << 0.078, 0.174, 0.092, 0.309, 0.050, 0.294; break;
        case TrafficClass::Streaming:      w << 0.101, 0.195, 0.297, 0.092, 0.119, 0.192; break;
    }
    return WeightVector::verbatim(std::move(w));
}

ImportanceList::ImportanceList(std::vector<AttributeId> limpo, std::size_t important_count)
    : limpo_(std::move(limpo)), important_count_(important_count) {
    if (limpo_.size() != kAttributeCount)
        throw std::invalid_argument("importance list must name all six attributes");
    std::array<bool, kAttributeCount> seen{};
    for (AttributeId id : limpo_) {
        if (seen[index_of(id)])
            throw std::invalid_argument("attribute '" + std::string(to_string(id)) +
                                        "' listed twice in importance list");
        seen[index_of(id)] = true;
    }
    if (important_count_ == 0 || important_count_ >= limpo_.size())
        throw std::invalid_argument("important sublist must be a proper non-empty prefix");
}

std::vector<int> ImportanceList::important_indices() const {
    std::vector<int> out;
    for (AttributeId id : important()) out.push_back(static_cast<int>(index_of(id)));
    return out;
}

std::vector<int> ImportanceList::non_important_indices() const {
    std::vector<int> out;
    for (AttributeId id : non_important()) out.push_back(static_cast<int>(index_of(id)));
    return out;
}

ImportanceList derive_limpo(TrafficClass tc) {
    const WeightVector w = ahp_weights(tc);
    std::vector<AttributeId> ids;
    for (const auto& a : kAttributes) ids.push_back(a.id);
    std::stable_sort(ids.begin(), ids.end(),
                     [&](AttributeId a, AttributeId b) { return w[a] > w[b]; });
    return ImportanceList(std::move(ids));
}

void BwmComparisons::validate() const {
    const auto m = a_best.size();
    if (m < 2 || a_worst.size() != m) throw BwmError("comparison vectors must have equal length >= 2");
    if (best < 0 || worst < 0 || static_cast<std::size_t>(best) >= m ||
        static_cast<std::size_t>(worst) >= m || best == worst)
        throw BwmError("best and worst must be distinct criterion indices");
    auto in_scale = [](int a) { return a >= 1 && a <= 9; };
    if (!std::all_of(a_best.begin(), a_best.end(), in_scale) ||
        !std::all_of(a_worst.begin(), a_worst.end(), in_scale))
        throw BwmError("comparison values must lie on the 1..9 scale");
    const auto b = static_cast<std::size_t>(best);
    const auto w = static_cast<std::size_t>(worst);
    if (a_best[b] != 1 || a_worst[w] != 1) throw BwmError("self-comparisons must equal 1");
    if (a_best[w] != *std::max_element(a_best.begin(), a_best.end()) ||
        a_worst[b] != *std::max_element(a_worst.begin(), a_worst.end()))
        throw BwmError("best-over-worst preference must be the largest entry");
}

BwmComparisons bwm_vectors(const ImportanceList& il) {
    const auto& limpo = il.limpo();
    const int m = static_cast<int>(limpo.size());
    BwmComparisons cmp;
    cmp.best = static_cast<int>(index_of(limpo.front()));
    cmp.worst = static_cast<int>(index_of(limpo.back()));
    cmp.a_best.assign(static_cast<std::size_t>(m), 1);
    cmp.a_worst.assign(static_cast<std::size_t>(m), 1);
    for (int p = 1; p <= m; ++p) {
        const auto col = index_of(limpo[static_cast<std::size_t>(p - 1)]);
        cmp.a_best[col] = static_cast<int>(std::lround(1.0 + 8.0 * (p - 1) / (m - 1)));
        cmp.a_worst[col] = static_cast<int>(std::lround(1.0 + 8.0 * (m - p) / (m - 1)));
    }
    return cmp;
}

BwmSolution solve_bwm(const BwmComparisons& cmp) {
    cmp.validate();
    const Eigen::Index m = static_cast<Eigen::Index>(cmp.a_best.size());
    const Eigen::Index xi = m;  // slack variable column

    LinearProgram lp;
    lp.c = Eigen::VectorXd::Zero(m + 1);
    lp.c(xi) = 1.0;
    lp.a_ub = Eigen::MatrixXd::Zero(4 * m, m + 1);
    lp.b_ub = Eigen::VectorXd::Zero(4 * m);
    for (Eigen::Index j = 0; j < m; ++j) {
        const double ab = cmp.a_best[static_cast<std::size_t>(j)];
        const double aw = cmp.a_worst[static_cast<std::size_t>(j)];
        for (int sign : {1, -1}) {
            const Eigen::Index r = 4 * j + (sign > 0 ? 0 : 2);
            // sign * (w_B - a_Bj w_j) - xi <= 0
            lp.a_ub(r, cmp.best) += sign;
            lp.a_ub(r, j) -= sign * ab;
            lp.a_ub(r, xi) = -1.0;
            // sign * (w_j - a_jW w_W) - xi <= 0
            lp.a_ub(r + 1, j) += sign;
            lp.a_ub(r + 1, cmp.worst) -= sign * aw;
            lp.a_ub(r + 1, xi) = -1.0;
        }
    }
    lp.a_eq = Eigen::MatrixXd::Zero(1, m + 1);
    lp.a_eq.row(0).head(m).setOnes();
    lp.b_eq = Eigen::VectorXd::Ones(1);

    const LpResult res = solve_lp(lp);
    if (res.status != LpStatus::Optimal) throw BwmError("BWM linear program failed to solve");

    Eigen::VectorXd w = res.x.head(m).cwiseMax(0.0);
    w /= w.sum();
    const double residual = bwm_residual(cmp, w);
    return BwmSolution{WeightVector(std::move(w)), std::max(res.x(xi), residual)};
}

double bwm_residual(const BwmComparisons& cmp, const Eigen::Ref<const Eigen::VectorXd>& w) {
    double worst = 0.0;
    const double wb = w(cmp.best);
    const double ww = w(cmp.worst);
    for (Eigen::Index j = 0; j < w.size(); ++j) {
        const auto k = static_cast<std::size_t>(j);
        worst = std::max({worst, std::abs(wb - cmp.a_best[k] * w(j)),
                          std::abs(w(j) - cmp.a_worst[k] * ww)});
    }
    return worst;
}

double sv_topsis(const Eigen::Ref<const Eigen::MatrixXd>& dm, const Eigen::Ref<const Eigen::VectorXd>& w,
                 std::span<const Direction> dirs) {
    return pairwise_spread(topsis_scores(normalize_topsis(dm), w, dirs));
}

double sv_saw(const Eigen::Ref<const Eigen::MatrixXd>& dm, const Eigen::Ref<const Eigen::VectorXd>& w,
              std::span<const Direction> dirs) {
    return pairwise_spread(saw_scores(normalize_saw(dm, dirs), w));
}

SpreadObjective::SpreadObjective(Method method, const Eigen::Ref<const Eigen::MatrixXd>& dm,
                                 std::span<const Direction> dirs)
    : method_(method),
      nm_(method == Method::Topsis ? normalize_topsis(dm) : normalize_saw(dm, dirs)),
      dirs_(dirs.begin(), dirs.end()) {
    detail::require_directions(dm.cols(), dirs);
}

double SpreadObjective::operator()(const Eigen::Ref<const Eigen::VectorXd>& w) const {
    if (method_ == Method::Topsis) return pairwise_spread(topsis_scores(nm_, w, dirs_));
    return pairwise_spread(saw_scores(nm_, w));
}

void HybridParams::validate() const {
    if (!(alpha >= 0.0) || !(beta >= 0.0) || std::abs(alpha + beta - 1.0) > 1e-12)
        throw HybridParamsError("hybrid shares must be non-negative and sum to 1 (alpha=" +
                                std::to_string(alpha) + ", beta=" + std::to_string(beta) + ")");
}

WeightVector combine_weights(const WeightVector& ws, const WeightVector& wo, const HybridParams& hp) {
    hp.validate();
    if (ws.size() != wo.size()) throw WeightError("weight vectors differ in length");
    Eigen::VectorXd w = hp.alpha * ws.values() + hp.beta * wo.values();
    w = w.cwiseMax(0.0).cwiseMin(1.0);
    return WeightVector(std::move(w));
}

}  // namespace netsel
