// Finite-sample layer: categorical trials from a joint distribution,
// frequency estimators with standard errors, and inequality checks with a
// statistical tolerance.
//
// Trial i draws the uniform variate SplitMix64::nth_double01(seed, i) and
// picks its cell by inverse CDF over the fixed order ++, +-, -+, --. Because
// draw i depends only on (seed, i), splitting the trial range across threads
// merges to bit-identical counts for every thread count.
#pragma once

#include <cstdint>

#include "leggett/distribution.hpp"
#include "leggett/inequality.hpp"
#include "leggett/numeric.hpp"

namespace leggett::mc {

struct TrialCounts {
    std::uint64_t n_pp = 0;
    std::uint64_t n_pm = 0;
    std::uint64_t n_mp = 0;
    std::uint64_t n_mm = 0;
    std::uint64_t n_total = 0; // always the sum of the four cells
    std::uint64_t seed = 0;
};

TrialCounts sample_counts(const JointDistribution<double>& p, std::uint64_t n,
                          std::uint64_t seed, unsigned threads = 1);

struct Estimate {
    // Empirical frequencies are exact rationals count/n, so they always form
    // a valid distribution with zero normalization error.
    JointDistribution<Rational> frequencies;
    CorrelatorSummary<double> summary;
    double se_a = 0.0;    // sqrt((1 - mean_a^2) / n)
    double se_b = 0.0;
    double se_corr = 0.0; // sqrt((1 - corr^2) / n)
};

Estimate estimate(const TrialCounts& counts);

enum class StatVerdict { satisfied, violated, inconclusive };

inline std::string_view stat_verdict_name(StatVerdict v) {
    switch (v) {
        case StatVerdict::satisfied: return "satisfied";
        case StatVerdict::violated: return "violated";
        case StatVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct EmpiricalReport {
    InequalityReport<double> inequality;
    double se_a = 0.0;
    double se_b = 0.0;
    double se_corr = 0.0;
    // Conservative propagated error: se_a + se_b + se_corr. An upper bound
    // on the slack standard error, so it can only make the check more
    // tolerant and never produces a false violation.
    double slack_se = 0.0;
    double z = 5.0;
    StatVerdict verdict = StatVerdict::inconclusive;
};

// Single-distribution check of sampled counts. The slacks come from the
// exact empirical frequencies, so they are never negative and the verdict is
// always satisfied; the statistical tolerance matters for the summary-based
// overload below.
EmpiricalReport empirical_check(const TrialCounts& counts, double z = 5.0);

// Check of an externally assembled correlator triple (e.g. a mixed one with
// marginals and correlator estimated from different runs).
EmpiricalReport empirical_check(const CorrelatorSummary<double>& summary, double se_a,
                                double se_b, double se_corr, double z = 5.0);

} // namespace leggett::mc
