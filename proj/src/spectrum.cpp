#include "chebrec/spectrum.hpp"

#include "chebrec/chebyshev.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chebrec {

Spectrum::Spectrum(std::vector<double> eigenvalues, std::vector<double> weights)
    : eigenvalues_(std::move(eigenvalues)), weights_(std::move(weights)) {
    if (eigenvalues_.empty())
        throw std::invalid_argument("Spectrum: at least one eigenvalue required");
    if (eigenvalues_.size() != weights_.size())
        throw std::invalid_argument("Spectrum: eigenvalues and weights differ in length");

    double prev = -2.0;
    for (double& lambda : eigenvalues_) {
        if (lambda > 1.0) {
            if (lambda - 1.0 > kDomainClampTol)
                throw std::domain_error("Spectrum: eigenvalue " + std::to_string(lambda) +
                                        " outside [-1, 1]");
            lambda = 1.0;
        } else if (lambda < -1.0) {
            if (-1.0 - lambda > kDomainClampTol)
                throw std::domain_error("Spectrum: eigenvalue " + std::to_string(lambda) +
                                        " outside [-1, 1]");
            lambda = -1.0;
        }
        if (lambda < prev)
            throw std::invalid_argument("Spectrum: eigenvalues must be ascending");
        prev = lambda;
    }

    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0))
            throw std::invalid_argument("Spectrum: weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol)
        throw std::invalid_argument("Spectrum: weights sum to " + std::to_string(sum) +
                                    ", expected 1");
}

MomentVector MomentVector::truncated(int m) const {
    if (m < 1 || m > count())
        throw std::invalid_argument("MomentVector::truncated: invalid prefix length");
    return MomentVector{std::vector<double>(values.begin(), values.begin() + m)};
}

MomentVector moments(const Spectrum& spectrum, int count) {
    if (count < 1) throw std::invalid_argument("moments: count must be positive");
    std::vector<double> m(static_cast<std::size_t>(count), 0.0);
    const auto& lambdas = spectrum.eigenvalues();
    const auto& weights = spectrum.weights();
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        const double x = lambdas[k];
        const double w = weights[k];
        double prev = 1.0;
        double cur = x;
        m[0] += w;
        if (count > 1) m[1] += w * x;
        for (int j = 2; j < count; ++j) {
            const double next = 2.0 * x * cur - prev;
            prev = cur;
            cur = next;
            m[j] += w * cur;
        }
    }
    return MomentVector{std::move(m)};
}

} // namespace chebrec
