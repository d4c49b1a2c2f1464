#pragma once

#include <cstdint>
#include <random>

namespace wsnga {

/// Named sub-streams of a run. Every stochastic component draws from its own
/// stream so adding draws in one place never perturbs another.
enum class Stream : std::uint64_t {
    Deployment = 1,
    Evolution = 2,
    Leach = 3,
    Lifetime = 4,
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, Stream stream,
                                    std::uint64_t index = 0) noexcept {
    return mix64(mix64(master ^ mix64(static_cast<std::uint64_t>(stream))) + index);
}

/// Reproducible random source: std::mt19937_64 (its output sequence is fixed
/// by the standard) with hand-rolled transforms, since the standard
/// distributions are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t master, Stream stream, std::uint64_t index = 0)
        : engine_(derive_seed(master, stream, index)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n), unbiased. n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % n;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % n;
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace wsnga
