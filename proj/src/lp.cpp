#include "netsel/lp.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace netsel {

namespace {

// Tableau layout: rows 0..m-1 are constraints, row m holds reduced costs with
// the negated objective value in the right-hand-side column.
class Tableau {
public:
    Tableau(Eigen::Index rows, Eigen::Index cols) : t_(Eigen::MatrixXd::Zero(rows + 1, cols + 1)) {}

    Eigen::MatrixXd& data() { return t_; }
    Eigen::Index constraints() const { return t_.rows() - 1; }
    Eigen::Index columns() const { return t_.cols() - 1; }
    double& rhs(Eigen::Index i) { return t_(i, t_.cols() - 1); }
    double& cost(Eigen::Index j) { return t_(t_.rows() - 1, j); }

    void pivot(Eigen::Index row, Eigen::Index col) {
        t_.row(row) /= t_(row, col);
        for (Eigen::Index i = 0; i < t_.rows(); ++i) {
            if (i == row) continue;
            const double f = t_(i, col);
            if (f != 0.0) t_.row(i) -= f * t_.row(row);
        }
    }

    /// Sets the cost row to the reduced costs of objective `c` for `basis`.
    void price(const Eigen::VectorXd& c, const std::vector<Eigen::Index>& basis) {
        auto obj = t_.row(t_.rows() - 1);
        obj.setZero();
        obj.head(c.size()) = c.transpose();
        for (Eigen::Index i = 0; i < constraints(); ++i) {
            const double cb = c(basis[static_cast<std::size_t>(i)]);
            if (cb != 0.0) obj -= cb * t_.row(i);
        }
    }

    // Bland's rule: lowest-index improving column, lowest-index basic variable
    // among tied ratios. Returns false when unbounded.
    bool optimize(std::vector<Eigen::Index>& basis, Eigen::Index allowed_cols, double tol) {
        for (;;) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < allowed_cols; ++j) {
                if (cost(j) < -tol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;

            Eigen::Index leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 0; i < constraints(); ++i) {
                const double a = t_(i, enter);
                if (a <= tol) continue;
                const double ratio = rhs(i) / a;
                if (ratio < best - tol ||
                    (ratio <= best + tol && leave >= 0 &&
                     basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                    best = std::min(best, ratio);
                    leave = i;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
            basis[static_cast<std::size_t>(leave)] = enter;
        }
    }

private:
    Eigen::MatrixXd t_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp, double tol) {
    const Eigen::Index n = lp.c.size();
    const Eigen::Index m_ub = lp.a_ub.rows();
    const Eigen::Index m_eq = lp.a_eq.rows();
    if ((m_ub > 0 && lp.a_ub.cols() != n) || (m_eq > 0 && lp.a_eq.cols() != n) ||
        lp.b_ub.size() != m_ub || lp.b_eq.size() != m_eq)
        throw std::invalid_argument("linear program dimensions are inconsistent");

    const Eigen::Index m = m_ub + m_eq;

    // Rows whose slack cannot start in the basis get an artificial variable.
    std::vector<Eigen::Index> needs_artificial;
    for (Eigen::Index i = 0; i < m_ub; ++i)
        if (lp.b_ub(i) < 0.0) needs_artificial.push_back(i);
    for (Eigen::Index i = 0; i < m_eq; ++i) needs_artificial.push_back(m_ub + i);

    const Eigen::Index n_art = static_cast<Eigen::Index>(needs_artificial.size());
    const Eigen::Index first_art = n + m_ub;
    const Eigen::Index total = first_art + n_art;

    Tableau tab(m, total);
    auto& t = tab.data();
    std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));

    for (Eigen::Index i = 0; i < m_ub; ++i) {
        t.row(i).head(n) = lp.a_ub.row(i);
        t(i, n + i) = 1.0;
        tab.rhs(i) = lp.b_ub(i);
        basis[static_cast<std::size_t>(i)] = n + i;
    }
    for (Eigen::Index i = 0; i < m_eq; ++i) {
        t.row(m_ub + i).head(n) = lp.a_eq.row(i);
        tab.rhs(m_ub + i) = lp.b_eq(i);
    }
    for (Eigen::Index k = 0; k < n_art; ++k) {
        const Eigen::Index row = needs_artificial[static_cast<std::size_t>(k)];
        if (tab.rhs(row) < 0.0) t.row(row) *= -1.0;
        t(row, first_art + k) = 1.0;
        basis[static_cast<std::size_t>(row)] = first_art + k;
    }

    LpResult result;

    if (n_art > 0) {
        Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(total);
        phase1.tail(n_art).setOnes();
        tab.price(phase1, basis);
        tab.optimize(basis, total, tol);
        const double infeasibility = -tab.rhs(m);
        const double scale = 1.0 + (m > 0 ? t.col(total).head(m).cwiseAbs().maxCoeff() : 0.0);
        if (infeasibility > 1e-9 * scale) {
            result.status = LpStatus::Infeasible;
            return result;
        }
        // Pivot zero-level artificials out where a structural/slack column allows.
        for (Eigen::Index i = 0; i < m; ++i) {
            if (basis[static_cast<std::size_t>(i)] < first_art) continue;
            for (Eigen::Index j = 0; j < first_art; ++j) {
                if (std::abs(t(i, j)) > 1e-9) {
                    tab.pivot(i, j);
                    basis[static_cast<std::size_t>(i)] = j;
                    break;
                }
            }
        }
    }

    Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(total);
    phase2.head(n) = lp.c;
    tab.price(phase2, basis);
    if (!tab.optimize(basis, first_art, tol)) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    result.status = LpStatus::Optimal;
    result.x = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i) {
        const Eigen::Index b = basis[static_cast<std::size_t>(i)];
        if (b < n) result.x(b) = tab.rhs(i);
    }
    result.objective = lp.c.dot(result.x);
    return result;
}

}  // namespace netsel
