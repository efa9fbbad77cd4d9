// Born-rule generator: joint distributions for two-qubit pure states under
// projective measurements at given analyzer angles.
//
// The measurement basis at angle t uses the half-angle h = kind_factor * t/2:
// plus vector (cos h, sin h), minus vector (-sin h, cos h). With that
// convention the photon singlet correlator is -cos 2(a-b) and the spin-1/2
// singlet correlator is -cos(a-b).
#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include "leggett/distribution.hpp"
#include "leggett/inequality.hpp"
#include "leggett/types.hpp"

namespace leggett::quantum {

using Amplitudes = std::array<std::complex<double>, 4>; // basis order ++, +-, -+, --

class TwoQubitState {
public:
    // Normalizes to unit norm; throws ZeroVector on an all-zero input.
    TwoQubitState(Amplitudes amplitudes, Kind kind);

    const Amplitudes& amplitudes() const { return amplitudes_; }
    Kind kind() const { return kind_; }
    double squared_norm() const;

private:
    Amplitudes amplitudes_;
    Kind kind_;
};

TwoQubitState singlet_state(Kind kind = Kind::photon);
TwoQubitState phi_plus_state(Kind kind = Kind::photon);
// Product of two definite polarizations: measuring particle i at angle_i
// gives + with certainty.
TwoQubitState product_state(double angle1, double angle2, Kind kind = Kind::photon);

// Declarative description of a state, as accepted by the CLI.
struct StateSpec {
    std::string name;                          // "singlet" | "phi_plus", or empty
    std::optional<std::array<double, 2>> product_angles;
    std::optional<Amplitudes> amplitudes;      // raw, normalized on construction
    Kind kind = Kind::photon;
};

TwoQubitState state_from_spec(const StateSpec& spec);

// P(s,t) = |<basis(s at a) x basis(t at b) | state>|^2, validated and tagged
// with the settings.
JointDistribution<double> born_joint(const TwoQubitState& state, const SettingPair& pair);

// Analytic singlet cross-check: (0, 0, -cos(kind_factor * (a-b))).
CorrelatorSummary<double> singlet_closed_form(const SettingPair& pair, Kind kind);

// Haar-distributed pure state: 8 standard normals form 4 complex amplitudes,
// then normalize. Deterministic per seed.
TwoQubitState random_pure_state(std::uint64_t seed, Kind kind = Kind::photon);

} // namespace leggett::quantum
