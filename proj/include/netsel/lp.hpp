#pragma once

#include <Eigen/Dense>

namespace netsel {

/// minimize c'x  subject to  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0.
struct LinearProgram {
    Eigen::VectorXd c;
    Eigen::MatrixXd a_ub;
    Eigen::VectorXd b_ub;
    Eigen::MatrixXd a_eq;
    Eigen::VectorXd b_eq;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Eigen::VectorXd x;
    double objective = 0.0;
};

/// Two-phase dense tableau simplex with Bland's pivoting rule. Deterministic
/// and cycle-free; intended for problems with a few dozen rows and columns.
LpResult solve_lp(const LinearProgram& lp, double tol = 1e-12);

}  // namespace netsel
