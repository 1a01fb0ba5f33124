#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace topolab {

/// Seed for anything randomized; equal seeds reproduce equal results.
struct RngSeed {
    std::uint64_t value = 0;
};

/// Seeded random source with reproducible primitive draws.
///
/// Wraps std::mt19937_64 but derives doubles and bounded integers from the
/// raw 64-bit output directly, so a given seed yields the same stream on any
/// standard library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    explicit Rng(RngSeed seed) : engine_(seed.value) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform in [0, 1) with 53 bits of precision.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    /// Standard exponential deviate (mean 1).
    double exponential() { return -std::log(1.0 - unit()); }

    /// Uniform integer in [0, n); unbiased via rejection. n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t x = engine_();
        std::uint64_t r = x % n;
        while (x - r > std::uint64_t(0) - n) {
            x = engine_();
            r = x % n;
        }
        return r;
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[static_cast<std::size_t>(below(i))]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace topolab
