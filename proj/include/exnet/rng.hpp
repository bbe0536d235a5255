#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace exnet {

/// Deterministic draws on top of mt19937_64. The std:: distributions are
/// implementation-defined, so every draw used by the simulator is spelled
/// out here instead.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t bits() { return gen_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] inclusive.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(gen_() % static_cast<uint64_t>(hi - lo + 1));
    }

    /// Draw from a power-law density p(t) ~ t^-beta supported on [lo, hi].
    /// beta is the density exponent (the value a log-binned density fit of
    /// the draws recovers).
    double truncated_power_law(double beta, double lo, double hi) {
        double u = uniform();
        if (std::abs(beta - 1.0) < 1e-12) return lo * std::pow(hi / lo, u);
        double a = 1.0 - beta;
        return std::pow(u * (std::pow(hi, a) - std::pow(lo, a)) + std::pow(lo, a), 1.0 / a);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace exnet
