#include "leggett/quantum.hpp"

#include <cmath>

#include "leggett/rng.hpp"

namespace leggett::quantum {

namespace {

constexpr double kZeroNormFloor = 1e-24; // squared norm below this is "all zero"

struct BasisVector {
    double c_plus;  // component on the reference + axis
    double c_minus; // component on the reference - axis
};

BasisVector plus_vector(Setting s, Kind kind) {
    const double h = kind_factor(kind) * s.angle / 2.0;
    return {std::cos(h), std::sin(h)};
}

BasisVector minus_vector(Setting s, Kind kind) {
    const double h = kind_factor(kind) * s.angle / 2.0;
    return {-std::sin(h), std::cos(h)};
}

} // namespace

TwoQubitState::TwoQubitState(Amplitudes amplitudes, Kind kind)
    : amplitudes_(amplitudes), kind_(kind) {
    double norm2 = 0.0;
    for (const auto& a : amplitudes_) norm2 += std::norm(a);
    if (!(norm2 > kZeroNormFloor))
        throw ZeroVector("state amplitudes are all zero");
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amplitudes_) a *= inv;
}

double TwoQubitState::squared_norm() const {
    double norm2 = 0.0;
    for (const auto& a : amplitudes_) norm2 += std::norm(a);
    return norm2;
}

TwoQubitState singlet_state(Kind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    return TwoQubitState({0.0, r, -r, 0.0}, kind);
}

TwoQubitState phi_plus_state(Kind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    return TwoQubitState({r, 0.0, 0.0, r}, kind);
}

TwoQubitState product_state(double angle1, double angle2, Kind kind) {
    const BasisVector v1 = plus_vector(Setting{angle1}, kind);
    const BasisVector v2 = plus_vector(Setting{angle2}, kind);
    return TwoQubitState({v1.c_plus * v2.c_plus, v1.c_plus * v2.c_minus,
                          v1.c_minus * v2.c_plus, v1.c_minus * v2.c_minus},
                         kind);
}

TwoQubitState state_from_spec(const StateSpec& spec) {
    if (!spec.name.empty()) {
        if (spec.name == "singlet") return singlet_state(spec.kind);
        if (spec.name == "phi_plus") return phi_plus_state(spec.kind);
        throw ConfigError("unknown state name \"" + spec.name +
                          "\" (expected singlet or phi_plus)");
    }
    if (spec.product_angles)
        return product_state((*spec.product_angles)[0], (*spec.product_angles)[1], spec.kind);
    if (spec.amplitudes) return TwoQubitState(*spec.amplitudes, spec.kind);
    throw ConfigError("state spec must carry a name, product angles, or amplitudes");
}

JointDistribution<double> born_joint(const TwoQubitState& state, const SettingPair& pair) {
    const Kind kind = state.kind();
    const BasisVector a_vec[2] = {plus_vector(pair.a, kind), minus_vector(pair.a, kind)};
    const BasisVector b_vec[2] = {plus_vector(pair.b, kind), minus_vector(pair.b, kind)};
    const Amplitudes& psi = state.amplitudes();

    std::array<double, 4> probs{};
    for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
            // <e_s(a) x e_t(b) | psi>; the basis vectors are real.
            const std::complex<double> amp =
                a_vec[s].c_plus * (b_vec[t].c_plus * psi[0] + b_vec[t].c_minus * psi[1]) +
                a_vec[s].c_minus * (b_vec[t].c_plus * psi[2] + b_vec[t].c_minus * psi[3]);
            probs[static_cast<std::size_t>(2 * s + t)] = std::norm(amp);
        }
    }
    return validate_distribution<double>(probs, pair);
}

CorrelatorSummary<double> singlet_closed_form(const SettingPair& pair, Kind kind) {
    const double corr = -std::cos(kind_factor(kind) * (pair.a.angle - pair.b.angle));
    return {0.0, 0.0, corr, Provenance::single_distribution};
}

TwoQubitState random_pure_state(std::uint64_t seed, Kind kind) {
    SplitMix64 rng(seed);
    for (;;) {
        Amplitudes amps;
        for (auto& a : amps) {
            const auto [re, im] = rng.normal_pair();
            a = {re, im};
        }
        double norm2 = 0.0;
        for (const auto& a : amps) norm2 += std::norm(a);
        if (norm2 > kZeroNormFloor) return TwoQubitState(amps, kind);
        // measure-zero draw, try the next stream position
    }
}

} // namespace leggett::quantum
