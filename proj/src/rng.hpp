#pragma once

#include <cmath>
#include <cstdint>

namespace sg {

// splitmix64. The full generator is these two update/output equations:
//   state <- state + 0x9E3779B97F4A7C15
//   z <- state; z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//              z <- (z ^ (z >> 27)) * 0x94D049BB133111EB; output z ^ (z >> 31)
// Same bit stream on every platform, so every seeded artifact
// (masks, noise, weights) reproduces exactly.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Inclusive bounds. Modulo bias is negligible against 2^64 for the
    // small ranges used here.
    int uniform_int(int lo, int hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    // Standard normal via Box-Muller; two uniforms per sample, no cache,
    // so the draw count is a pure function of the call count.
    float normal() {
        double u1 = 1.0 - next_double(); // (0, 1]
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        return static_cast<float>(r * std::cos(2.0 * 3.14159265358979323846 * u2));
    }

    uint64_t state() const { return state_; }
    void set_state(uint64_t s) { state_ = s; }

private:
    uint64_t state_;
};

} // namespace sg
