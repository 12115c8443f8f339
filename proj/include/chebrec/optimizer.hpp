#pragma once

#include "chebrec/response.hpp"
#include "chebrec/spectrum.hpp"
#include "chebrec/transform.hpp"

#include <Eigen/Core>

namespace chebrec {

/// Window integrals of the Chebyshev basis: A(l, i) = integral of T_i over
/// window l. Depends only on the grid and the truncation order, so it is
/// built once and shared across samples.
struct DesignMatrix {
    Eigen::MatrixXd A;
    GridSpec grid;

    int moment_count() const { return static_cast<int>(A.cols()); }
};

DesignMatrix build_design_matrix(const GridSpec& grid, int moment_count);

/// B(l) = spectral weight in window l (the target vector of the fit).
Eigen::VectorXd window_targets(const Spectrum& spectrum, const GridSpec& grid);

/// Minimum-norm least-squares solution of A c ~ B via SVD, with rank cutoff
/// max(rows, cols) * machine epsilon relative to the largest singular value.
Eigen::VectorXd solve_effective_coefficients(const Eigen::MatrixXd& A, const Eigen::VectorXd& B);

/// Rank-one lift b_ij = c_i m_j / ||m||^2: the unique minimum-Frobenius-norm
/// matrix whose contraction with the moments reproduces c exactly.
KernelCoefficients lift_coefficients(const Eigen::VectorXd& c, const MomentVector& moments);

/// Per-sample optimal effective coefficients c_min (this is what gets stored
/// as the training target).
Eigen::VectorXd solve_sample_effective(const DatasetSample& sample, const DesignMatrix& design);

/// Per-sample optimal kernel b_min = lift(c_min).
KernelCoefficients solve_sample_target(const DatasetSample& sample, const DesignMatrix& design);

} // namespace chebrec
