#include "chebrec/optimizer.hpp"

#include "chebrec/chebyshev.hpp"

#include <Eigen/SVD>

#include <limits>
#include <stdexcept>

namespace chebrec {

DesignMatrix build_design_matrix(const GridSpec& grid, int moment_count) {
    if (moment_count < 1)
        throw std::invalid_argument("build_design_matrix: moment_count must be positive");
    const int rows = grid.window_count();
    Eigen::MatrixXd A(rows, moment_count);
    for (int l = 0; l < rows; ++l) {
        const std::vector<double> seg =
            segment_integral_all(moment_count, grid.window_left(l), grid.window_right(l));
        for (int i = 0; i < moment_count; ++i) A(l, i) = seg[i];
    }
    return DesignMatrix{std::move(A), grid};
}

Eigen::VectorXd window_targets(const Spectrum& spectrum, const GridSpec& grid) {
    Eigen::VectorXd B(grid.window_count());
    for (int l = 0; l < grid.window_count(); ++l)
        B[l] = window_strength(spectrum, grid.window_left(l), grid.window_right(l));
    return B;
}

Eigen::VectorXd solve_effective_coefficients(const Eigen::MatrixXd& A, const Eigen::VectorXd& B) {
    if (A.rows() != B.size())
        throw std::invalid_argument("solve_effective_coefficients: row count mismatch");
    if (!A.allFinite() || !B.allFinite())
        throw std::invalid_argument("solve_effective_coefficients: non-finite input");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(static_cast<double>(std::max(A.rows(), A.cols())) *
                     std::numeric_limits<double>::epsilon());
    return svd.solve(B);
}

KernelCoefficients lift_coefficients(const Eigen::VectorXd& c, const MomentVector& moments) {
    const int m = moments.count();
    if (c.size() != m)
        throw std::invalid_argument("lift_coefficients: coefficient/moment length mismatch");
    const Eigen::Map<const Eigen::VectorXd> mv(moments.values.data(), m);
    const double norm2 = mv.squaredNorm();
    if (!(norm2 > 0.0))
        throw std::invalid_argument("lift_coefficients: zero moment vector");
    return KernelCoefficients{(c * mv.transpose()) / norm2};
}

Eigen::VectorXd solve_sample_effective(const DatasetSample& sample, const DesignMatrix& design) {
    if (sample.moments.count() != design.moment_count())
        throw std::invalid_argument("solve_sample_effective: moment count mismatch");
    return solve_effective_coefficients(design.A,
                                        window_targets(sample.spectrum, design.grid));
}

KernelCoefficients solve_sample_target(const DatasetSample& sample, const DesignMatrix& design) {
    return lift_coefficients(solve_sample_effective(sample, design), sample.moments);
}

} // namespace chebrec
