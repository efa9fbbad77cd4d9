// Seeded random joint distributions, the fuel for the universality property
// suites.
//
// Exact mode picks a lattice point of the probability 3-simplex with the
// given denominator: three draws from {0..N} are sorted and their gaps taken
// as numerators, so the four entries sum to N by construction and the
// distribution normalizes exactly. Float mode normalizes four independent
// unit exponentials (a Dirichlet(1,1,1,1) sample).
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>

#include "leggett/distribution.hpp"
#include "leggett/numeric.hpp"
#include "leggett/rng.hpp"

namespace leggett {

inline JointDistribution<Rational> random_exact_distribution(std::uint64_t seed,
                                                             std::uint64_t denominator) {
    if (denominator < 1)
        throw OutOfRange("simplex denominator must be >= 1");
    SplitMix64 rng(seed);
    std::array<std::uint64_t, 3> cuts{};
    for (auto& c : cuts) c = rng.next_below(denominator + 1);
    std::sort(cuts.begin(), cuts.end());
    const std::array<std::uint64_t, 4> parts{cuts[0], cuts[1] - cuts[0],
                                             cuts[2] - cuts[1], denominator - cuts[2]};
    std::array<Rational, 4> entries;
    for (std::size_t i = 0; i < 4; ++i)
        entries[i] = Rational(BigInt(parts[i]), BigInt(denominator));
    return validate_distribution<Rational>(entries);
}

inline JointDistribution<double> random_float_distribution(std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::array<double, 4> draws{};
    double total = 0.0;
    for (auto& e : draws) {
        e = rng.next_exponential();
        total += e;
    }
    std::array<double, 4> entries{};
    for (std::size_t i = 0; i < 4; ++i) entries[i] = draws[i] / total;
    return validate_distribution<double>(entries);
}

} // namespace leggett
