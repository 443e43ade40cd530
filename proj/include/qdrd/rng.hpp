#pragma once

#include <cmath>
#include <cstdint>

#include "qdrd/scalar_ops.hpp"

namespace qdrd {

// splitmix64: counter-based, full-avalanche output function. Chosen over the
// standard-library engines so that seeded streams are identical across
// compilers and runs, which the byte-determinism contract depends on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Deterministic random stream: uniforms from 53 bits, Gaussians via
// Box-Muller (pair cached). Generation-side math is not routed through the
// operation counter; the ledger covers pipeline arithmetic only.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_.next(); }

    // Uniform on (0, 1]; never 0 so log() below is safe.
    double uniform01() {
        return (static_cast<double>(gen_.next() >> 11) + 1.0) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.141592653589793238462643 * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

    // Circularly symmetric complex Gaussian with total variance `var`
    // (each real dimension gets var/2).
    Complex cgaussian(double var) {
        const double s = std::sqrt(var * 0.5);
        const double re = s * gaussian();
        const double im = s * gaussian();
        return {re, im};
    }

    // Unbiased uniform integer in [0, bound).
    std::uint64_t uniform_index(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = gen_.next();
        } while (r >= limit);
        return r % bound;
    }

private:
    SplitMix64 gen_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

} // namespace qdrd
