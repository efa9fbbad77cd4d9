#include "leggett/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "leggett/rng.hpp"

namespace leggett::mc {

namespace {

std::array<std::uint64_t, 4> count_range(const std::array<double, 3>& thresholds,
                                         std::uint64_t seed, std::uint64_t begin,
                                         std::uint64_t end) {
    std::array<std::uint64_t, 4> counts{};
    for (std::uint64_t i = begin; i < end; ++i) {
        const double u = SplitMix64::nth_double01(seed, i);
        std::size_t cell;
        if (u < thresholds[0]) cell = 0;
        else if (u < thresholds[1]) cell = 1;
        else if (u < thresholds[2]) cell = 2;
        else cell = 3;
        ++counts[cell];
    }
    return counts;
}

double standard_error(double mean, std::uint64_t n) {
    const double variance = std::max(0.0, 1.0 - mean * mean);
    return std::sqrt(variance / static_cast<double>(n));
}

StatVerdict classify(const InequalityReport<double>& report, double z, double slack_se) {
    const double floor = -z * slack_se;
    if (report.upper_slack >= floor && report.lower_slack >= floor)
        return StatVerdict::satisfied;
    return StatVerdict::violated;
}

} // namespace

TrialCounts sample_counts(const JointDistribution<double>& p, std::uint64_t n,
                          std::uint64_t seed, unsigned threads) {
    if (n < 1) throw InvalidSampleSize("sample size must be >= 1");
    if (threads == 0) threads = 1;

    // Inverse-CDF thresholds over the fixed cell order ++, +-, -+, --.
    const std::array<double, 3> thresholds{
        p.p_pp(), p.p_pp() + p.p_pm(), p.p_pp() + p.p_pm() + p.p_mp()};

    std::array<std::uint64_t, 4> totals{};
    if (threads == 1 || n < 2 * threads) {
        totals = count_range(thresholds, seed, 0, n);
    } else {
        // Any split of [0, n) merges to the same counts; draw i depends only
        // on (seed, i).
        std::vector<std::array<std::uint64_t, 4>> partial(threads);
        std::vector<std::thread> workers;
        workers.reserve(threads);
        const std::uint64_t chunk = n / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = t * chunk;
            const std::uint64_t end = t + 1 == threads ? n : begin + chunk;
            workers.emplace_back([&, t, begin, end] {
                partial[t] = count_range(thresholds, seed, begin, end);
            });
        }
        for (auto& w : workers) w.join();
        for (const auto& part : partial)
            for (std::size_t c = 0; c < 4; ++c) totals[c] += part[c];
    }

    return TrialCounts{totals[0], totals[1], totals[2], totals[3], n, seed};
}

Estimate estimate(const TrialCounts& counts) {
    const std::uint64_t n = counts.n_total;
    if (n < 1) throw InvalidSampleSize("counts hold no trials");
    if (counts.n_pp + counts.n_pm + counts.n_mp + counts.n_mm != n)
        throw InternalInconsistency("cell counts do not sum to n_total");

    const BigInt total(n);
    auto frequencies = validate_distribution<Rational>(
        {Rational(BigInt(counts.n_pp), total), Rational(BigInt(counts.n_pm), total),
         Rational(BigInt(counts.n_mp), total), Rational(BigInt(counts.n_mm), total)});

    const CorrelatorSummary<Rational> exact = summarize(frequencies);
    Estimate result{std::move(frequencies),
                    {to_double(exact.mean_a), to_double(exact.mean_b),
                     to_double(exact.corr), Provenance::single_distribution},
                    0.0, 0.0, 0.0};
    result.se_a = standard_error(result.summary.mean_a, n);
    result.se_b = standard_error(result.summary.mean_b, n);
    result.se_corr = standard_error(result.summary.corr, n);
    return result;
}

EmpiricalReport empirical_check(const TrialCounts& counts, double z) {
    const Estimate est = estimate(counts);
    EmpiricalReport report;
    // Exact frequencies admit the exact check, witnesses included.
    report.inequality = to_float_report(check_distribution(est.frequencies));
    report.se_a = est.se_a;
    report.se_b = est.se_b;
    report.se_corr = est.se_corr;
    report.slack_se = est.se_a + est.se_b + est.se_corr;
    report.z = z;
    report.verdict = classify(report.inequality, z, report.slack_se);
    return report;
}

EmpiricalReport empirical_check(const CorrelatorSummary<double>& summary, double se_a,
                                double se_b, double se_corr, double z) {
    EmpiricalReport report;
    report.inequality = check_summary(summary);
    report.se_a = se_a;
    report.se_b = se_b;
    report.se_corr = se_corr;
    report.slack_se = se_a + se_b + se_corr;
    report.z = z;
    report.verdict = classify(report.inequality, z, report.slack_se);
    return report;
}

} // namespace leggett::mc
