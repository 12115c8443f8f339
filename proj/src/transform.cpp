#include "chebrec/transform.hpp"

#include "chebrec/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

namespace chebrec {

GridSpec::GridSpec(int divisions, int window) : divisions_(divisions), window_(window) {
    if (divisions < 1) throw std::invalid_argument("GridSpec: divisions must be positive");
    if (window < 1 || window > divisions)
        throw std::invalid_argument("GridSpec: window length must satisfy 1 <= L <= K");
}

double transform_eval(double omega, const KernelCoefficients& coeffs,
                      const MomentVector& moments) {
    const int m = moments.count();
    if (coeffs.b.rows() != m || coeffs.b.cols() != m)
        throw std::invalid_argument("transform_eval: coefficient order does not match moments");
    const std::vector<double> t = cheb_eval_all(m, omega);
    const Eigen::Map<const Eigen::VectorXd> tv(t.data(), m);
    const Eigen::Map<const Eigen::VectorXd> mv(moments.values.data(), m);
    return tv.dot(coeffs.b * mv);
}

double window_strength(const Spectrum& spectrum, double a, double b) {
    if (a > b) throw std::invalid_argument("window_strength: requires a <= b");
    const bool closed_right = b >= 1.0;
    double sum = 0.0;
    const auto& lambdas = spectrum.eigenvalues();
    const auto& weights = spectrum.weights();
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        const double x = lambdas[k];
        if (x >= a && (x < b || (closed_right && x == b))) sum += weights[k];
    }
    return sum;
}

Eigen::VectorXd effective_coefficients(const KernelCoefficients& coeffs,
                                       const MomentVector& moments) {
    const int m = moments.count();
    if (coeffs.b.rows() != m || coeffs.b.cols() != m)
        throw std::invalid_argument(
            "effective_coefficients: coefficient order does not match moments");
    const Eigen::Map<const Eigen::VectorXd> mv(moments.values.data(), m);
    return coeffs.b * mv;
}

ResidualVector residual_vector(const KernelCoefficients& coeffs, const MomentVector& moments,
                               const Spectrum& spectrum, const GridSpec& grid) {
    return residual_vector(effective_coefficients(coeffs, moments), spectrum, grid);
}

ResidualVector residual_vector(const Eigen::VectorXd& effective, const Spectrum& spectrum,
                               const GridSpec& grid) {
    const int m = static_cast<int>(effective.size());
    if (m < 1) throw std::invalid_argument("residual_vector: empty coefficient vector");
    ResidualVector out;
    out.values.resize(grid.window_count());
    for (int l = 0; l < grid.window_count(); ++l) {
        const double a = grid.window_left(l);
        const double b = grid.window_right(l);
        const std::vector<double> seg = segment_integral_all(m, a, b);
        const Eigen::Map<const Eigen::VectorXd> sv(seg.data(), m);
        out.values[l] = effective.dot(sv) - window_strength(spectrum, a, b);
    }
    return out;
}

double cost_infinity(const ResidualVector& residuals) {
    if (residuals.values.size() == 0)
        throw std::invalid_argument("cost_infinity: empty residual vector");
    return residuals.values.cwiseAbs().maxCoeff();
}

double cost_upper(const ResidualVector& residuals) {
    if (residuals.values.size() == 0)
        throw std::invalid_argument("cost_upper: empty residual vector");
    return residuals.values.norm();
}

} // namespace chebrec
