// The inequality machinery for pairs of dichotomic observables.
//
// For outcomes A, B in {-1, +1} the pointwise identity
//
//     1 - |A - B|  =  A*B  =  -1 + |A + B|
//
// holds in all four cases. Averaging it over any joint distribution and
// dropping non-negative probability terms yields the basic Leggett
// inequalities
//
//     1 - |mean_a - mean_b|  >=  corr  >=  -1 + |mean_a + mean_b|,
//
// whose one-sided slacks are themselves probabilities in disguise:
//
//     upper slack = 4*P(-,+) if mean_a >= mean_b, else 4*P(+,-)
//     lower slack = 4*P(-,-) if mean_a + mean_b >= 0, else 4*P(+,+)
//
// check_distribution verifies those witness identities on every call (exact
// mode: exactly), so a satisfied verdict is never an accident of tolerance.
#pragma once

#include <cstdlib>
#include <optional>
#include <utility>

#include "leggett/distribution.hpp"
#include "leggett/errors.hpp"
#include "leggett/numeric.hpp"
#include "leggett/types.hpp"

namespace leggett {

// The three algebraically equal forms of the product A*B for one outcome pair.
struct PointwiseIdentity {
    int left;    // 1 - |A - B|
    int product; // A * B
    int right;   // -1 + |A + B|
};

inline PointwiseIdentity pointwise_identity(Outcome a, Outcome b) {
    const int va = a.value();
    const int vb = b.value();
    return {1 - std::abs(va - vb), va * vb, -1 + std::abs(va + vb)};
}

// Marginal averages and the correlator of one setting pair. provenance
// records whether all three numbers came from the same distribution; only
// mixed triples can ever violate the inequalities.
template <typename T>
struct CorrelatorSummary {
    T mean_a;
    T mean_b;
    T corr;
    Provenance provenance = Provenance::single_distribution;
};

// slack == 4 * P(cell), available in single-distribution mode only.
template <typename T>
struct SlackWitness {
    Cell cell;
    T four_p;
};

template <typename T>
struct InequalityReport {
    T upper_bound; // 1 - |mean_a - mean_b|
    T lower_bound; // -1 + |mean_a + mean_b|
    T upper_slack; // upper_bound - corr
    T lower_slack; // corr - lower_bound
    bool satisfied = false;
    std::optional<SlackWitness<T>> witness_upper;
    std::optional<SlackWitness<T>> witness_lower;
};

// Marginal averages plus the correlator, the latter computed three ways:
// the direct signed sum and the two normalization-rewritten forms
// 1 - 2P(+,-) - 2P(-,+) and -1 + 2P(++) + 2P(--). The three paths must
// agree (exactly in exact mode); disagreement signals an arithmetic bug in
// this library, not bad input.
template <typename T>
CorrelatorSummary<T> summarize(const JointDistribution<T>& d) {
    const T& pp = d.p_pp();
    const T& pm = d.p_pm();
    const T& mp = d.p_mp();
    const T& mm = d.p_mm();

    T mean_a = T(pp + pm - mp - mm);
    T mean_b = T(pp - pm + mp - mm);
    T direct = T(pp - pm - mp + mm);
    T off_diag = T(T(1) - T(2) * pm - T(2) * mp);
    T diag = T(T(-1) + T(2) * pp + T(2) * mm);

    if (!values_agree(direct, off_diag) || !values_agree(direct, diag))
        throw InternalInconsistency(
            "correlator paths disagree: direct=" + std::to_string(to_double(direct)) +
            " off-diagonal=" + std::to_string(to_double(off_diag)) +
            " diagonal=" + std::to_string(to_double(diag)));

    return {std::move(mean_a), std::move(mean_b), std::move(direct),
            Provenance::single_distribution};
}

namespace detail {

template <typename T>
void require_unit_range(const T& value, const char* name) {
    if (abs_value(value) > T(1) + NumericPolicy<T>::comparison_tolerance())
        throw OutOfRange(std::string(name) + " magnitude exceeds 1: " +
                         std::to_string(to_double(value)));
}

} // namespace detail

// (upper, lower) bounds on the correlator implied by the marginal averages.
// lower <= upper holds everywhere on the closed unit square since
// upper - lower = 2 - |mean_a - mean_b| - |mean_a + mean_b|
//              = 2 - 2*max(|mean_a|, |mean_b|).
template <typename T>
std::pair<T, T> leggett_bounds(const T& mean_a, const T& mean_b) {
    detail::require_unit_range(mean_a, "mean_a");
    detail::require_unit_range(mean_b, "mean_b");
    T upper = T(T(1) - abs_value<T>(T(mean_a - mean_b)));
    T lower = T(T(-1) + abs_value<T>(T(mean_a + mean_b)));
    return {std::move(upper), std::move(lower)};
}

// Checks a correlator triple against the bounds. Accepts mixed-provenance
// triples, which MAY be violated; no witnesses are possible here because no
// distribution is attached.
template <typename T>
InequalityReport<T> check_summary(const CorrelatorSummary<T>& s) {
    detail::require_unit_range(s.corr, "corr");
    auto [upper, lower] = leggett_bounds(s.mean_a, s.mean_b);
    InequalityReport<T> report;
    report.upper_slack = T(upper - s.corr);
    report.lower_slack = T(s.corr - lower);
    report.upper_bound = std::move(upper);
    report.lower_bound = std::move(lower);
    const T tol = NumericPolicy<T>::comparison_tolerance();
    report.satisfied = report.upper_slack >= -tol && report.lower_slack >= -tol;
    return report;
}

// Full check of a single distribution, with the slack-witness identities
// verified on the way. Ties (mean_a == mean_b, mean_a == -mean_b) take the
// ">=" branch; at a tie both branch identities hold simultaneously, so the
// choice cannot be observed in the numbers.
template <typename T>
InequalityReport<T> check_distribution(const JointDistribution<T>& d) {
    const CorrelatorSummary<T> s = summarize(d);
    InequalityReport<T> report = check_summary(s);

    const Cell upper_cell = s.mean_a >= s.mean_b ? Cell::mp : Cell::pm;
    const Cell lower_cell = s.mean_a + s.mean_b >= T(0) ? Cell::mm : Cell::pp;
    T upper_four_p = T(T(4) * d.p(upper_cell));
    T lower_four_p = T(T(4) * d.p(lower_cell));

    if (!values_agree(report.upper_slack, upper_four_p))
        throw InternalInconsistency("upper slack does not equal 4*P(" +
                                    std::string(cell_name(upper_cell)) + ")");
    if (!values_agree(report.lower_slack, lower_four_p))
        throw InternalInconsistency("lower slack does not equal 4*P(" +
                                    std::string(cell_name(lower_cell)) + ")");

    report.witness_upper = SlackWitness<T>{upper_cell, std::move(upper_four_p)};
    report.witness_lower = SlackWitness<T>{lower_cell, std::move(lower_four_p)};
    return report;
}

// Double view of an exact report (witnesses converted along).
inline InequalityReport<double> to_float_report(const InequalityReport<Rational>& r) {
    InequalityReport<double> out;
    out.upper_bound = to_double(r.upper_bound);
    out.lower_bound = to_double(r.lower_bound);
    out.upper_slack = to_double(r.upper_slack);
    out.lower_slack = to_double(r.lower_slack);
    out.satisfied = r.satisfied;
    if (r.witness_upper)
        out.witness_upper = SlackWitness<double>{r.witness_upper->cell,
                                                 to_double(r.witness_upper->four_p)};
    if (r.witness_lower)
        out.witness_lower = SlackWitness<double>{r.witness_lower->cell,
                                                 to_double(r.witness_lower->four_p)};
    return out;
}

} // namespace leggett
