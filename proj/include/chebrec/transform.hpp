#pragma once

#include "chebrec/spectrum.hpp"

#include <Eigen/Core>

namespace chebrec {

/// Uniform discretization of [-1, 1] into K cells of spacing d = 2/K, with
/// sliding windows of L cells (resolution delta = 2L/K). Window l covers
/// [window_left(l), window_right(l)] for l = 0 .. K - L; only windows fully
/// contained in the domain are used.
class GridSpec {
  public:
    GridSpec(int divisions, int window);

    int divisions() const { return divisions_; }
    int window() const { return window_; }
    double spacing() const { return 2.0 / divisions_; }
    double resolution() const { return 2.0 * window_ / divisions_; }
    int window_count() const { return divisions_ - window_ + 1; }

    // Endpoints computed as 2p/K - 1 so the first left edge is exactly -1
    // and the last right edge exactly +1.
    double window_left(int l) const { return 2.0 * l / divisions_ - 1.0; }
    double window_right(int l) const { return 2.0 * (l + window_) / divisions_ - 1.0; }

  private:
    int divisions_;
    int window_;
};

/// M x M coefficient matrix b_ij of the truncated bilinear Chebyshev kernel
/// K(omega, nu) = sum_ij b_ij T_i(omega) T_j(nu).
struct KernelCoefficients {
    Eigen::MatrixXd b;

    int order() const { return static_cast<int>(b.rows()); }
};

/// Per-window integrated errors C_l of the transform against the spectrum.
struct ResidualVector {
    Eigen::VectorXd values;
};

/// Phi(omega) = sum_ij b_ij T_i(omega) m_j.
double transform_eval(double omega, const KernelCoefficients& coeffs,
                      const MomentVector& moments);

/// Total spectral weight in [a, b): half-open, except windows reaching the
/// domain edge b >= 1 which are closed so the full-domain window sums to 1.
double window_strength(const Spectrum& spectrum, double a, double b);

/// c_i = sum_j b_ij m_j; the transform depends on b only through c.
Eigen::VectorXd effective_coefficients(const KernelCoefficients& coeffs,
                                       const MomentVector& moments);

/// C_l = int over window l of Phi - window strength, evaluated exactly via
/// closed-form segment integrals (no quadrature error).
ResidualVector residual_vector(const KernelCoefficients& coeffs, const MomentVector& moments,
                               const Spectrum& spectrum, const GridSpec& grid);

/// Same, from precomputed effective coefficients.
ResidualVector residual_vector(const Eigen::VectorXd& effective, const Spectrum& spectrum,
                               const GridSpec& grid);

/// C(Delta) = max_l |C_l|.
double cost_infinity(const ResidualVector& residuals);

/// C_U(Delta) = ||C||_2 >= C(Delta).
double cost_upper(const ResidualVector& residuals);

} // namespace chebrec
