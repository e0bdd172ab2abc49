#ifndef LORACAP_RNG_HPP
#define LORACAP_RNG_HPP

#include <cmath>
#include <cstdint>

namespace loracap {

/// Small counter-based generator: each (seed, stream) pair yields an
/// independent deterministic sequence, so parallel workers can be handed
/// per-trial streams without any shared state. splitmix64 core.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) {
        state_ = mix(seed + 0x9E3779B97F4A7C15ULL) ^ mix(stream + 0xD1B54A32D192ED03ULL);
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Bernoulli with success probability p.
    bool next_bool(double p) { return next_double() < p; }

    /// Exponential with unit mean.
    double next_exp() { return -std::log1p(-next_double()); }

    /// Poisson by exponential inter-arrival counting; fine for small means.
    std::uint32_t next_poisson(double mean) {
        double budget = mean;
        std::uint32_t k = 0;
        for (;;) {
            budget -= next_exp();
            if (budget < 0.0) return k;
            ++k;
        }
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace loracap

#endif
