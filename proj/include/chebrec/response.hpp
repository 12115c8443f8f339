#pragma once

#include "chebrec/rng.hpp"
#include "chebrec/spectrum.hpp"
#include "chebrec/transform.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace chebrec {

/// Parameters of the skew-Gaussian strength profile:
/// Gamma * exp(-(w - mu)^2 / (2 sigma^2)) * (1 + erf(w * alpha / (sigma sqrt(2)))).
/// Note the erf argument uses w itself, not w - mu.
struct SkewedGaussianParams {
    double mu = 0.0;
    double sigma = 0.1;
    double alpha = 0.0;
    double gamma = 1.0;

    void validate() const;
};

double skewed_gaussian_density(double omega, const SkewedGaussianParams& params);

/// N independent uniform draws on [-1, 1], returned ascending.
std::vector<double> sample_eigenvalues(Rng& rng, int count);

/// Weights proportional to the skew-Gaussian density (Gamma = 1), normalized
/// to sum 1. Throws if every density underflows to zero.
Spectrum build_response(const std::vector<double>& eigenvalues,
                        const SkewedGaussianParams& params);

struct DatasetConfig {
    int n_eigenvalues = 200;
    int n_samples = 2500;
    int n_alpha = 50;
    int n_sigma = 50;
    std::array<double, 2> alpha_range{0.0, 2.5};
    std::array<double, 2> sigma_range{0.0, 0.4}; // lower bound = grid resolution
    std::array<double, 2> mu_range{-0.3, 0.3};
    int moment_count = 10;
    GridSpec grid{70, 2};
    std::uint64_t seed = 1;

    void validate() const;
};

/// Default configuration for a resolution grid: sigma_min tied to the grid
/// resolution, everything else at its stock value.
DatasetConfig make_dataset_config(const GridSpec& grid, int moment_count, std::uint64_t seed);

struct DatasetSample {
    SkewedGaussianParams params;
    Spectrum spectrum;
    MomentVector moments;
    /// Effective least-squares coefficients c (filled by the optimizer stage);
    /// the full b matrix is recovered through the rank-one lift.
    std::optional<std::vector<double>> target_c;
};

/// Cartesian grid of n_alpha x n_sigma (alpha, sigma) values, one sample per
/// pair with mu drawn uniformly and a fresh eigenvalue draw. Each sample uses
/// a sub-seed derived from (seed, index), so any jobs count produces
/// identical output.
std::vector<DatasetSample> generate_dataset(const DatasetConfig& config, int jobs = 1);

struct SplitCounts {
    int train = 2000;
    int val = 400;
    int test = 100;
};

struct DatasetSplits {
    std::vector<DatasetSample> train;
    std::vector<DatasetSample> val;
    std::vector<DatasetSample> test;
};

/// Deterministic Fisher-Yates shuffle under the dataset seed, then partition
/// into disjoint, exhaustive train/val/test lists.
DatasetSplits split_dataset(std::vector<DatasetSample> samples, const SplitCounts& counts,
                            std::uint64_t seed);

} // namespace chebrec
