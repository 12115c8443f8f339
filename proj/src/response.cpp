#include "chebrec/response.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace chebrec {

namespace {

constexpr int kDegenerateRetries = 16;

// Stream labels for sub-seed derivation.
constexpr std::uint64_t kSampleStream = 0x5a17;
constexpr std::uint64_t kSplitStream = 0x5911;

double grid_value(const std::array<double, 2>& range, int index, int count) {
    if (count == 1) return range[0];
    return range[0] + (range[1] - range[0]) * index / (count - 1);
}

DatasetSample generate_sample(const DatasetConfig& config, int index) {
    const int a = index / config.n_sigma;
    const int s = index % config.n_sigma;
    SkewedGaussianParams params;
    params.alpha = grid_value(config.alpha_range, a, config.n_alpha);
    params.sigma = grid_value(config.sigma_range, s, config.n_sigma);
    params.gamma = 1.0;

    Rng rng(derive_seed(config.seed, kSampleStream, static_cast<std::uint64_t>(index)));
    params.mu = rng.uniform(config.mu_range[0], config.mu_range[1]);
    const std::vector<double> eigenvalues = sample_eigenvalues(rng, config.n_eigenvalues);

    for (int attempt = 0;; ++attempt) {
        try {
            Spectrum spectrum = build_response(eigenvalues, params);
            MomentVector m = moments(spectrum, config.moment_count);
            return DatasetSample{params, std::move(spectrum), std::move(m), std::nullopt};
        } catch (const std::runtime_error&) {
            if (attempt >= kDegenerateRetries)
                throw std::runtime_error("generate_dataset: sample " + std::to_string(index) +
                                         " degenerate after " +
                                         std::to_string(kDegenerateRetries) + " retries");
            params.mu = rng.uniform(config.mu_range[0], config.mu_range[1]);
        }
    }
}

} // namespace

void SkewedGaussianParams::validate() const {
    if (!(sigma > 0.0)) throw std::invalid_argument("SkewedGaussianParams: sigma must be > 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("SkewedGaussianParams: gamma must be > 0");
    if (!(alpha >= 0.0)) throw std::invalid_argument("SkewedGaussianParams: alpha must be >= 0");
}

double skewed_gaussian_density(double omega, const SkewedGaussianParams& params) {
    const double z = (omega - params.mu) / params.sigma;
    const double skew = 1.0 + std::erf(omega * params.alpha / (params.sigma * std::sqrt(2.0)));
    return params.gamma * std::exp(-0.5 * z * z) * skew;
}

std::vector<double> sample_eigenvalues(Rng& rng, int count) {
    if (count < 1) throw std::invalid_argument("sample_eigenvalues: count must be positive");
    std::vector<double> values(static_cast<std::size_t>(count));
    for (double& v : values) v = rng.uniform(-1.0, 1.0);
    std::sort(values.begin(), values.end());
    return values;
}

Spectrum build_response(const std::vector<double>& eigenvalues,
                        const SkewedGaussianParams& params) {
    params.validate();
    SkewedGaussianParams unit = params;
    unit.gamma = 1.0;
    std::vector<double> weights;
    weights.reserve(eigenvalues.size());
    double sum = 0.0;
    for (double lambda : eigenvalues) {
        const double w = skewed_gaussian_density(lambda, unit);
        weights.push_back(w);
        sum += w;
    }
    if (!(sum > 0.0))
        throw std::runtime_error("build_response: all densities underflowed to zero");
    for (double& w : weights) w /= sum;
    return Spectrum(eigenvalues, std::move(weights));
}

void DatasetConfig::validate() const {
    if (n_eigenvalues < 1 || n_samples < 1 || n_alpha < 1 || n_sigma < 1 || moment_count < 1)
        throw std::invalid_argument("DatasetConfig: counts must be positive");
    if (n_alpha * n_sigma != n_samples)
        throw std::invalid_argument("DatasetConfig: n_alpha * n_sigma must equal n_samples");
    if (sigma_range[0] != grid.resolution())
        throw std::invalid_argument(
            "DatasetConfig: sigma_range lower bound must equal the grid resolution");
    if (!(sigma_range[0] <= sigma_range[1]) || !(alpha_range[0] <= alpha_range[1]) ||
        !(mu_range[0] <= mu_range[1]))
        throw std::invalid_argument("DatasetConfig: malformed parameter range");
}

DatasetConfig make_dataset_config(const GridSpec& grid, int moment_count, std::uint64_t seed) {
    DatasetConfig config;
    config.grid = grid;
    config.sigma_range[0] = grid.resolution();
    config.moment_count = moment_count;
    config.seed = seed;
    return config;
}

std::vector<DatasetSample> generate_dataset(const DatasetConfig& config, int jobs) {
    config.validate();
    std::vector<std::optional<DatasetSample>> slots(static_cast<std::size_t>(config.n_samples));

    if (jobs <= 1) {
        for (int i = 0; i < config.n_samples; ++i) slots[i] = generate_sample(config, i);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> failures(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) {
            workers.emplace_back([&, t] {
                try {
                    for (int i = t; i < config.n_samples; i += jobs)
                        slots[i] = generate_sample(config, i);
                } catch (...) {
                    failures[t] = std::current_exception();
                }
            });
        }
        for (auto& w : workers) w.join();
        for (auto& f : failures)
            if (f) std::rethrow_exception(f);
    }

    std::vector<DatasetSample> samples;
    samples.reserve(slots.size());
    for (auto& slot : slots) samples.push_back(std::move(*slot));
    return samples;
}

DatasetSplits split_dataset(std::vector<DatasetSample> samples, const SplitCounts& counts,
                            std::uint64_t seed) {
    if (counts.train < 0 || counts.val < 0 || counts.test < 0)
        throw std::invalid_argument("split_dataset: negative split count");
    const std::size_t total = static_cast<std::size_t>(counts.train) + counts.val + counts.test;
    if (total != samples.size())
        throw std::invalid_argument("split_dataset: counts sum to " + std::to_string(total) +
                                    " but dataset has " + std::to_string(samples.size()));

    Rng rng(derive_seed(seed, kSplitStream));
    for (std::size_t i = samples.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.bounded(i));
        std::swap(samples[i - 1], samples[j]);
    }

    DatasetSplits splits;
    auto it = std::make_move_iterator(samples.begin());
    splits.train.assign(it, it + counts.train);
    it += counts.train;
    splits.val.assign(it, it + counts.val);
    it += counts.val;
    splits.test.assign(it, it + counts.test);
    return splits;
}

} // namespace chebrec
