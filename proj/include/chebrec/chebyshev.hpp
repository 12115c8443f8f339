#pragma once

#include <vector>

namespace chebrec {

/// Inputs within this distance outside [-1, 1] are clamped to the boundary;
/// anything beyond raises std::domain_error. Rescaled energies can land at
/// 1 +/- a few ulp, which must not be treated as a domain violation.
inline constexpr double kDomainClampTol = 1e-12;

/// T_degree(x) by the three-term recurrence T_{n+1} = 2x T_n - T_{n-1}.
double cheb_eval(int degree, double x);

/// [T_0(x), ..., T_{count-1}(x)] in a single recurrence pass.
std::vector<double> cheb_eval_all(int count, double x);

/// Exact integral of T_degree over [a, b] in [-1, 1], via the closed-form
/// antiderivative: int T_0 = x, int T_1 = x^2/2,
/// int T_n = (T_{n+1}/(n+1) - T_{n-1}/(n-1))/2 for n >= 2.
double segment_integral(int degree, double a, double b);

/// [segment_integral(i, a, b) for i < count], sharing the recurrence.
std::vector<double> segment_integral_all(int count, double a, double b);

/// Affine map of raw energies in [e0, emax] onto [-1, 1]:
/// E -> (2E - (e0 + emax)) / (emax - e0). Order preserved.
std::vector<double> rescale_spectrum(const std::vector<double>& raw_energies,
                                     double e0, double emax);

} // namespace chebrec
