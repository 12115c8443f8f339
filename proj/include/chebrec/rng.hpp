#pragma once

#include <cstdint>
#include <random>

namespace chebrec {

/// Stateless 64-bit finalizer (splitmix64 output function). Used to derive
/// independent sub-stream seeds from a base seed plus stream labels, so that
/// parallel and serial generation see identical randomness.
inline std::uint64_t hash64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
    return hash64(hash64(hash64(base) ^ a) ^ b);
}

/// Deterministic random stream: mt19937_64 (bit-exact by the standard) with
/// explicit output maps, so draws reproduce across platforms and toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) from the top 53 bits of one 64-bit draw.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n) via multiply-shift; n must be positive.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    std::uint64_t next() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

} // namespace chebrec
