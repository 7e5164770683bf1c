#pragma once

#include <cstdint>
#include <random>

namespace hfrlab {

/// Deterministic random stream. Wraps mt19937_64 but derives uniform and
/// normal variates itself, so two builds with the same seed produce the
/// same sequence regardless of the standard library's distribution code.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Unbiased integer in [0, n). n must be positive.
    std::uint64_t integer(std::uint64_t n);

    /// Standard normal via Box-Muller (spare value cached).
    double normal();

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace hfrlab
