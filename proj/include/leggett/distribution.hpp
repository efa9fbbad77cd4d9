// Joint probability distribution over the four outcome pairs of two
// dichotomic observables at fixed analyzer settings.
//
// Instances only exist in a validated state: entries non-negative (float
// mode: >= -1e-12 before clamping) and summing to one (float mode: within
// 1e-9). Validation rejects rather than repairs; the only silent fix is
// clamping float entries in [-1e-12, 0) to zero.
#pragma once

#include <array>
#include <optional>
#include <string>

#include "leggett/errors.hpp"
#include "leggett/numeric.hpp"
#include "leggett/types.hpp"

namespace leggett {

template <typename T>
class JointDistribution {
public:
    static JointDistribution validated(std::array<T, 4> entries,
                                       std::optional<SettingPair> settings = {}) {
        using Policy = NumericPolicy<T>;
        T sum(0);
        for (std::size_t i = 0; i < 4; ++i) {
            T& e = entries[i];
            if (!Policy::finite(e))
                throw NonFinite("probability entry " + std::string(cell_name(Cell(i))) +
                                " is not finite");
            if (e < Policy::entry_floor())
                throw NegativeProbability("P(" + std::string(cell_name(Cell(i))) +
                                          ") = " + std::to_string(to_double(e)));
            if (e < T(0)) e = T(0); // rounding-noise clamp, float mode only
            sum += e;
        }
        if (abs_value<T>(T(sum - T(1))) > Policy::sum_tolerance())
            throw NotNormalized("entries sum to " + std::to_string(to_double(sum)));
        return JointDistribution(std::move(entries), std::move(settings));
    }

    const T& p(Cell c) const { return entries_[static_cast<std::size_t>(c)]; }
    const T& p_pp() const { return entries_[0]; }
    const T& p_pm() const { return entries_[1]; }
    const T& p_mp() const { return entries_[2]; }
    const T& p_mm() const { return entries_[3]; }

    const std::array<T, 4>& entries() const { return entries_; }
    const std::optional<SettingPair>& settings() const { return settings_; }

private:
    JointDistribution(std::array<T, 4> entries, std::optional<SettingPair> settings)
        : entries_(std::move(entries)), settings_(std::move(settings)) {}

    std::array<T, 4> entries_; // order: ++, +-, -+, --
    std::optional<SettingPair> settings_;
};

template <typename T>
JointDistribution<T> validate_distribution(const std::array<T, 4>& entries,
                                           std::optional<SettingPair> settings = {}) {
    return JointDistribution<T>::validated(entries, std::move(settings));
}

// Float view of an exact distribution (for sampling and report output).
inline JointDistribution<double> to_float_distribution(const JointDistribution<Rational>& d) {
    return validate_distribution<double>(
        {to_double(d.p_pp()), to_double(d.p_pm()), to_double(d.p_mp()), to_double(d.p_mm())},
        d.settings());
}

} // namespace leggett
