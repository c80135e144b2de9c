#include "wordruin/linear_core.hpp"

#include <algorithm>
#include <string>

#include "wordruin/errors.hpp"

namespace wordruin {

Eigen::VectorXd solve_fundamental(const QSystem& sys) {
    const Eigen::Index n = sys.q.rows();
    if (sys.q.cols() != n || sys.rhs.size() != n) {
        throw Error("DIMENSION", "q must be square and match rhs");
    }
    if (n == 0) return Eigen::VectorXd();

    const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - sys.q;
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);

    // With row pivoting the U-diagonal holds the pivots; a vanishing pivot
    // means some state cannot reach the absorbing set at all.
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (min_pivot < kSingularPivot) {
        throw Error("SINGULAR", "I - Q is singular (pivot " +
                                    std::to_string(min_pivot) + ")");
    }

    const Eigen::VectorXd x = lu.solve(sys.rhs);

    const double residual = (a * x - sys.rhs).lpNorm<Eigen::Infinity>();
    const double bound =
        kResidualTol * std::max(1.0, sys.rhs.lpNorm<Eigen::Infinity>());
    if (!(residual <= bound)) {
        throw Error("RESIDUAL_TOO_LARGE",
                    "residual " + std::to_string(residual) + " exceeds bound " +
                        std::to_string(bound));
    }
    return x;
}

}  // namespace wordruin
