// Hidden-variable side: subensembles of definite polarizations with
// Malus-law outcome probabilities, and the mixed-averages constructor that
// pulls marginals and correlator from different distributions.
//
// A single particle with definite polarization u measured at angle a
// transmits with probability cos^2 of the half-angle between them, so its
// average is cos(kind_factor * (a-u)). The product model treats the two
// particles as independent, which makes corr = mean_a * mean_b exactly; it
// is the simplest distribution with Malus marginals.
#pragma once

#include <string>

#include "leggett/distribution.hpp"
#include "leggett/inequality.hpp"
#include "leggett/quantum.hpp"
#include "leggett/types.hpp"

namespace leggett::hv {

struct MalusProductModel {
    Setting u; // particle-1 definite polarization
    Setting v; // particle-2 definite polarization
    Kind kind = Kind::photon;
};

// Average of the +-1 outcome: cos(kind_factor * (a - u)).
double malus_marginal(Setting u, Setting a, Kind kind);

// Transmission probability P(+ | u, a) = cos^2(kind_factor * (a - u) / 2).
double malus_transmission(Setting u, Setting a, Kind kind);

JointDistribution<double> malus_product_joint(const MalusProductModel& model,
                                              const SettingPair& pair);

// A correlator triple whose marginals and correlator were computed from
// different distributions. Feeding summary to check_summary MAY report a
// violation; that is the demonstration, not an error.
struct MixedSummary {
    CorrelatorSummary<double> summary; // provenance == mixed
    std::string marginal_source;
    std::string correlation_source;
};

// General mixing: marginals from one distribution, correlator from another.
// Passing the same distribution twice is allowed (the degenerate mix) and
// reproduces the single-distribution verdict.
MixedSummary mix_summaries(const JointDistribution<double>& marginal_src,
                           const std::string& marginal_desc,
                           const JointDistribution<double>& correlation_src,
                           const std::string& correlation_desc);

// The canonical mix: Malus-law marginals against a Born-rule correlator.
// Both sources must be evaluated at the same setting pair; a mismatch throws
// SettingMismatch.
MixedSummary mixed_triple(const MalusProductModel& marginal_model,
                          const SettingPair& marginal_settings,
                          const quantum::TwoQubitState& correlation_state,
                          const SettingPair& correlation_settings);

} // namespace leggett::hv
