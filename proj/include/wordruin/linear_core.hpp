#pragma once

#include <Eigen/Dense>

namespace wordruin {

// Transient block of an absorbing chain plus a right-hand side for the
// fundamental-matrix solve (I - Q) x = rhs. Entries of q lie in [0,1] with
// row sums <= 1; callers zero the absorbing columns.
struct QSystem {
    Eigen::MatrixXd q;
    Eigen::VectorXd rhs;
};

// Pivots below this signal a structurally singular system (some state cannot
// reach the absorbing set), not roundoff.
inline constexpr double kSingularPivot = 1e-14;

// Certificate: ||(I-Q)x - rhs||_inf <= kResidualTol * max(1, ||rhs||_inf).
inline constexpr double kResidualTol = 1e-9;

// Dense LU with row pivoting, residual-certified. Throws Error("SINGULAR")
// or Error("RESIDUAL_TOO_LARGE").
Eigen::VectorXd solve_fundamental(const QSystem& sys);

}  // namespace wordruin
