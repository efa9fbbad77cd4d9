// Step-by-step replay of the derivation that turns the pointwise identity
// into the two-sided bound, with a machine-checked slack for every step.
//
// Chain, writing P## for the joint probabilities, A/B for the marginal
// averages and E for the correlator:
//
//   eq2-left   1 - 2P(+,-) - 2P(-,+)  = E                      (identity)
//   eq2-right  -1 + 2P(++) + 2P(--)   = E                      (identity)
//   ineq3a/b   flip the sign of one off-diagonal term on the left form;
//              the gap is 4P(-,+) resp. 4P(+,-)
//   ineq4a/b   same left-hand sides bounded against E via eq2-left
//   ineq5a/b   rewrite those left-hand sides as 1 -+ (A - B); the rewrite
//              is an exact identity, checked with zero slack
//   ineq6      1 - |A - B| >= E, branch chosen by the sign of A - B
//   ineq7a/b   flip the sign of one diagonal term on the right form;
//              the gap is 4P(--) resp. 4P(++)
//   ineq8a/b   E bounded against those right-hand sides via eq2-right
//   ineq9a/b   rewrite as -1 +- (A + B), again exact
//   ineq10     E >= -1 + |A + B|, branch chosen by the sign of A + B
//   ineq11     both bounds combined; its slack is the tight margin
//              min(upper - E, E - lower)
//
// In exact mode every equality step must land on zero and every inequality
// step must equal its 4*P witness exactly; anything else throws
// InternalInconsistency, because it can only mean this library (not the
// input) did the algebra wrong.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leggett/distribution.hpp"
#include "leggett/inequality.hpp"
#include "leggett/numeric.hpp"

namespace leggett {

enum class StepLabel {
    eq2_left,
    eq2_right,
    ineq3a,
    ineq3b,
    ineq4a,
    ineq4b,
    ineq5a,
    ineq5b,
    ineq6,
    ineq7a,
    ineq7b,
    ineq8a,
    ineq8b,
    ineq9a,
    ineq9b,
    ineq10,
    ineq11,
};

inline std::string_view step_label_name(StepLabel label) {
    switch (label) {
        case StepLabel::eq2_left: return "eq2-left";
        case StepLabel::eq2_right: return "eq2-right";
        case StepLabel::ineq3a: return "ineq3a";
        case StepLabel::ineq3b: return "ineq3b";
        case StepLabel::ineq4a: return "ineq4a";
        case StepLabel::ineq4b: return "ineq4b";
        case StepLabel::ineq5a: return "ineq5a";
        case StepLabel::ineq5b: return "ineq5b";
        case StepLabel::ineq6: return "ineq6";
        case StepLabel::ineq7a: return "ineq7a";
        case StepLabel::ineq7b: return "ineq7b";
        case StepLabel::ineq8a: return "ineq8a";
        case StepLabel::ineq8b: return "ineq8b";
        case StepLabel::ineq9a: return "ineq9a";
        case StepLabel::ineq9b: return "ineq9b";
        case StepLabel::ineq10: return "ineq10";
        case StepLabel::ineq11: return "ineq11";
    }
    return "?";
}

template <typename T>
struct DerivationStep {
    StepLabel label;
    T lhs;
    T rhs;
    // lhs - rhs for one-sided steps; for the combined final step, the
    // smaller of the two one-sided margins around the correlator.
    T slack;
    bool equality = false;
    std::optional<std::string> slack_witness; // e.g. "4*P(-,+)"
};

template <typename T>
struct DerivationTrace {
    std::vector<DerivationStep<T>> steps;

    const DerivationStep<T>& step(StepLabel label) const {
        for (const auto& s : steps)
            if (s.label == label) return s;
        throw InternalInconsistency("trace is missing step " +
                                    std::string(step_label_name(label)));
    }
};

template <typename T>
DerivationTrace<T> derivation_trace(const JointDistribution<T>& d) {
    const T& pp = d.p_pp();
    const T& pm = d.p_pm();
    const T& mp = d.p_mp();
    const T& mm = d.p_mm();
    const CorrelatorSummary<T> s = summarize(d);
    const T& A = s.mean_a;
    const T& B = s.mean_b;
    const T& E = s.corr;
    const T tol = NumericPolicy<T>::comparison_tolerance();

    DerivationTrace<T> trace;
    trace.steps.reserve(17);

    auto check_identity = [&](const T& lhs, const T& rhs, const char* what) {
        if (!values_agree(lhs, rhs))
            throw InternalInconsistency(std::string(what) + " failed to hold");
    };

    auto add_equality = [&](StepLabel label, T lhs, T rhs) {
        T slack = T(lhs - rhs);
        if (!values_agree(slack, T(0)))
            throw InternalInconsistency("equality step " +
                                        std::string(step_label_name(label)) +
                                        " has nonzero slack");
        trace.steps.push_back({label, std::move(lhs), std::move(rhs),
                               std::move(slack), true, std::nullopt});
    };

    auto add_inequality = [&](StepLabel label, T lhs, T rhs, Cell witness_cell,
                              std::string witness_extra = {}) {
        T slack = T(lhs - rhs);
        T four_p = T(T(4) * d.p(witness_cell));
        if (!values_agree(slack, four_p))
            throw InternalInconsistency("step " + std::string(step_label_name(label)) +
                                        " slack does not equal 4*P(" +
                                        std::string(cell_name(witness_cell)) + ")");
        if (slack < -tol)
            throw InternalInconsistency("step " + std::string(step_label_name(label)) +
                                        " has negative slack");
        std::string witness = "4*P(" + std::string(cell_name(witness_cell)) + ")";
        if (!witness_extra.empty()) witness += "; " + witness_extra;
        trace.steps.push_back({label, std::move(lhs), std::move(rhs),
                               std::move(slack), false, std::move(witness)});
    };

    // Two rewritten forms of the correlator; both must reproduce it.
    const T corr_off = T(T(1) - T(2) * pm - T(2) * mp);
    const T corr_diag = T(T(-1) + T(2) * pp + T(2) * mm);
    add_equality(StepLabel::eq2_left, corr_off, E);
    add_equality(StepLabel::eq2_right, corr_diag, E);

    // Upper chain: flip one off-diagonal sign, bound the correlator, rewrite
    // in terms of the marginals.
    const T lhs3a = T(T(1) - T(2) * pm + T(2) * mp);
    const T lhs3b = T(T(1) + T(2) * pm - T(2) * mp);
    add_inequality(StepLabel::ineq3a, lhs3a, corr_off, Cell::mp);
    add_inequality(StepLabel::ineq3b, lhs3b, corr_off, Cell::pm);
    add_inequality(StepLabel::ineq4a, lhs3a, E, Cell::mp);
    add_inequality(StepLabel::ineq4b, lhs3b, E, Cell::pm);

    const T one_minus_ab = T(T(1) - A + B);
    const T one_plus_ab = T(T(1) + A - B);
    check_identity(lhs3a, one_minus_ab, "marginal rewrite 1-2P(+,-)+2P(-,+) = 1-A+B");
    check_identity(lhs3b, one_plus_ab, "marginal rewrite 1+2P(+,-)-2P(-,+) = 1+A-B");
    add_inequality(StepLabel::ineq5a, one_minus_ab, E, Cell::mp, "lhs = 1-A+B exactly");
    add_inequality(StepLabel::ineq5b, one_plus_ab, E, Cell::pm, "lhs = 1+A-B exactly");

    const bool a_ge_b = A >= B;
    const T upper_bound = T(T(1) - abs_value<T>(T(A - B)));
    check_identity(upper_bound, a_ge_b ? one_minus_ab : one_plus_ab,
                   "1-|A-B| equals the branch selected by sign(A-B)");
    add_inequality(StepLabel::ineq6, upper_bound, E, a_ge_b ? Cell::mp : Cell::pm,
                   a_ge_b ? "branch of ineq5a (A >= B)" : "branch of ineq5b (A < B)");

    // Lower chain: same moves on the diagonal form.
    const T rhs7a = T(T(-1) + T(2) * pp - T(2) * mm);
    const T rhs7b = T(T(-1) - T(2) * pp + T(2) * mm);
    add_inequality(StepLabel::ineq7a, corr_diag, rhs7a, Cell::mm);
    add_inequality(StepLabel::ineq7b, corr_diag, rhs7b, Cell::pp);
    add_inequality(StepLabel::ineq8a, E, rhs7a, Cell::mm);
    add_inequality(StepLabel::ineq8b, E, rhs7b, Cell::pp);

    const T minus_one_plus = T(T(-1) + A + B);
    const T minus_one_minus = T(T(-1) - A - B);
    check_identity(rhs7a, minus_one_plus, "marginal rewrite -1+2P(++)-2P(--) = -1+A+B");
    check_identity(rhs7b, minus_one_minus, "marginal rewrite -1-2P(++)+2P(--) = -1-A-B");
    add_inequality(StepLabel::ineq9a, E, minus_one_plus, Cell::mm, "rhs = -1+A+B exactly");
    add_inequality(StepLabel::ineq9b, E, minus_one_minus, Cell::pp, "rhs = -1-A-B exactly");

    const bool sum_nonneg = A + B >= T(0);
    const T lower_bound = T(T(-1) + abs_value<T>(T(A + B)));
    check_identity(lower_bound, sum_nonneg ? minus_one_plus : minus_one_minus,
                   "-1+|A+B| equals the branch selected by sign(A+B)");
    add_inequality(StepLabel::ineq10, E, lower_bound, sum_nonneg ? Cell::mm : Cell::pp,
                   sum_nonneg ? "branch of ineq9a (A+B >= 0)" : "branch of ineq9b (A+B < 0)");

    // Combined two-sided statement; slack is the tighter one-sided margin.
    T upper_margin = T(upper_bound - E);
    T lower_margin = T(E - lower_bound);
    T combined = std::min(upper_margin, lower_margin);
    if (combined < -tol)
        throw InternalInconsistency("combined step has negative slack");
    std::string combined_witness =
        "min(4*P(" + std::string(cell_name(a_ge_b ? Cell::mp : Cell::pm)) + "), 4*P(" +
        std::string(cell_name(sum_nonneg ? Cell::mm : Cell::pp)) + "))";
    trace.steps.push_back({StepLabel::ineq11, upper_bound, lower_bound,
                           std::move(combined), false, std::move(combined_witness)});

    return trace;
}

} // namespace leggett
