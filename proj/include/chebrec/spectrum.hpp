#pragma once

#include <vector>

namespace chebrec {

inline constexpr double kWeightSumTol = 1e-12;

/// Discrete response: eigenvalues lambda_k in [-1, 1] (ascending) carrying
/// normalized non-negative weights s_k with sum 1.
class Spectrum {
  public:
    /// Validates: equal lengths >= 1, eigenvalues ascending and inside
    /// [-1, 1] (clamped within kDomainClampTol), weights >= 0 summing to 1
    /// within kWeightSumTol.
    Spectrum(std::vector<double> eigenvalues, std::vector<double> weights);

    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    const std::vector<double>& weights() const { return weights_; }
    int size() const { return static_cast<int>(eigenvalues_.size()); }

  private:
    std::vector<double> eigenvalues_;
    std::vector<double> weights_;
};

/// First M Chebyshev moments of a spectrum; values[0] = 1 by normalization
/// and |values[j]| <= 1 throughout.
struct MomentVector {
    std::vector<double> values;

    int count() const { return static_cast<int>(values.size()); }

    /// Prefix view: the first m moments (m <= count()).
    MomentVector truncated(int m) const;
};

/// m_j = sum_k s_k T_j(lambda_k) for j < count.
MomentVector moments(const Spectrum& spectrum, int count);

} // namespace chebrec
