// Deterministic 64-bit PRNG used wherever the library needs randomness.
//
// The generator is splitmix64: the state advances by the golden-ratio
// increment and each output is a fixed avalanche mix of the new state.
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   out = z ^ (z >> 31)
//
// Draw #i from seed s is therefore the pure function mix(s + (i+1)*gamma),
// exposed as nth_u64(). Trial streams can be split across threads at any
// boundary and still merge to the same counts.
//
// Derived draws (all reproducible from this header plus the README):
//   next_double01   (x >> 11) * 2^-53                       -> [0, 1)
//   next_open01     ((x >> 11) + 1) * 2^-53                 -> (0, 1]
//   next_below(b)   128-bit multiply-shift with rejection   -> {0..b-1}, unbiased
//   normal_pair     Box-Muller on (open01, double01)
//   next_exponential  -ln(open01)                           -> unit exponential
#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace leggett {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += kGamma;
        return mix(state_);
    }

    // Draw #index (0-based) of the stream started from `seed`.
    static std::uint64_t nth_u64(std::uint64_t seed, std::uint64_t index) {
        return mix(seed + (index + 1) * kGamma);
    }

    static double nth_double01(std::uint64_t seed, std::uint64_t index) {
        return u64_to_double01(nth_u64(seed, index));
    }

    double next_double01() { return u64_to_double01(next_u64()); }

    double next_open01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform on {0, ..., bound-1}; exact via rejection of the short range.
    std::uint64_t next_below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Two independent standard normals (Box-Muller, no rejection).
    std::pair<double, double> normal_pair() {
        const double u1 = next_open01();
        const double u2 = next_double01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        return {radius * std::cos(theta), radius * std::sin(theta)};
    }

    double next_exponential() { return -std::log(next_open01()); }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static double u64_to_double01(std::uint64_t x) {
        return static_cast<double>(x >> 11) * 0x1.0p-53;
    }

    std::uint64_t state_;
};

} // namespace leggett
