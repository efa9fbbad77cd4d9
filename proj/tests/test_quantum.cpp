// Born-rule generator against an explicit projector-matrix oracle, plus the
// closed-form singlet cross-check.
#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>

#include "leggett/inequality.hpp"
#include "leggett/quantum.hpp"
#include "leggett/rng.hpp"

using namespace leggett;
using quantum::TwoQubitState;

namespace {

// Independent oracle: build the rank-one projector onto e_s(a) x e_t(b) as an
// explicit 4x4 matrix and evaluate the quadratic form <psi| Pi |psi>.
std::array<double, 2> oracle_axis(double angle, Kind kind, bool plus) {
    const double h = kind_factor(kind) * angle / 2.0;
    if (plus) return {std::cos(h), std::sin(h)};
    return {-std::sin(h), std::cos(h)};
}

double projector_probability(const TwoQubitState& state, const SettingPair& pair,
                             bool a_plus, bool b_plus) {
    const auto va = oracle_axis(pair.a.angle, state.kind(), a_plus);
    const auto vb = oracle_axis(pair.b.angle, state.kind(), b_plus);
    std::array<double, 4> e{va[0] * vb[0], va[0] * vb[1], va[1] * vb[0], va[1] * vb[1]};
    double projector[4][4];
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) projector[k][l] = e[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(l)];
    std::complex<double> value(0.0, 0.0);
    const auto& psi = state.amplitudes();
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
            value += std::conj(psi[static_cast<std::size_t>(k)]) * projector[k][l] *
                     psi[static_cast<std::size_t>(l)];
    return value.real();
}

} // namespace

TEST_CASE("named states have their defining amplitudes") {
    const auto singlet = quantum::singlet_state();
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(singlet.amplitudes()[0]) == 0.0);
    CHECK(singlet.amplitudes()[1].real() == doctest::Approx(r).epsilon(1e-12));
    CHECK(singlet.amplitudes()[2].real() == doctest::Approx(-r).epsilon(1e-12));
    CHECK(std::abs(singlet.amplitudes()[3]) == 0.0);

    const auto phi = quantum::phi_plus_state();
    CHECK(phi.amplitudes()[0].real() == doctest::Approx(r).epsilon(1e-12));
    CHECK(phi.amplitudes()[3].real() == doctest::Approx(r).epsilon(1e-12));
}

TEST_CASE("raw amplitudes normalize; the zero vector is rejected") {
    const TwoQubitState scaled({2.0, 0.0, 0.0, 0.0}, Kind::photon);
    CHECK(scaled.amplitudes()[0].real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(scaled.squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(TwoQubitState({0.0, 0.0, 0.0, 0.0}, Kind::photon), ZeroVector);
}

TEST_CASE("state_from_spec dispatches names, product angles and amplitudes") {
    quantum::StateSpec named;
    named.name = "singlet";
    CHECK(quantum::state_from_spec(named).amplitudes()[1].real() ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

    quantum::StateSpec unknown;
    unknown.name = "w_state";
    CHECK_THROWS_AS(quantum::state_from_spec(unknown), ConfigError);

    quantum::StateSpec product;
    product.product_angles = {{0.0, 0.0}};
    CHECK(quantum::state_from_spec(product).amplitudes()[0].real() ==
          doctest::Approx(1.0).epsilon(1e-12));

    quantum::StateSpec empty;
    CHECK_THROWS_AS(quantum::state_from_spec(empty), ConfigError);
}

TEST_CASE("born_joint frozen examples") {
    const auto singlet = quantum::singlet_state();
    SUBCASE("aligned settings: perfect anticorrelation") {
        const auto d = quantum::born_joint(singlet, {Setting{0.0}, Setting{0.0}});
        CHECK(d.p_pp() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(d.p_pm() == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(d.p_mp() == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(d.p_mm() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(summarize(d).corr == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(d.settings().has_value());
    }
    SUBCASE("pi/4 apart: uniform") {
        const auto d = quantum::born_joint(singlet, {Setting{0.0}, Setting{M_PI / 4}});
        for (double e : d.entries()) CHECK(e == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(summarize(d).corr == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("aligned product state: deterministic outcome") {
        const auto d = quantum::born_joint(quantum::product_state(0.0, 0.0),
                                           {Setting{0.0}, Setting{0.0}});
        CHECK(d.p_pp() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("born_joint agrees with the projector oracle") {
    SplitMix64 master(6006);
    for (int i = 0; i < 100; ++i) {
        const Kind kind = i % 2 == 0 ? Kind::photon : Kind::spin;
        const auto state = quantum::random_pure_state(master.next_u64(), kind);
        const SettingPair pair{Setting{4.0 * M_PI * master.next_double01() - 2.0 * M_PI},
                               Setting{4.0 * M_PI * master.next_double01() - 2.0 * M_PI}};
        const auto d = quantum::born_joint(state, pair);
        CHECK(d.p_pp() ==
              doctest::Approx(projector_probability(state, pair, true, true)).epsilon(1e-12));
        CHECK(d.p_pm() ==
              doctest::Approx(projector_probability(state, pair, true, false)).epsilon(1e-12));
        CHECK(d.p_mp() ==
              doctest::Approx(projector_probability(state, pair, false, true)).epsilon(1e-12));
        CHECK(d.p_mm() ==
              doctest::Approx(projector_probability(state, pair, false, false)).epsilon(1e-12));
    }
}

TEST_CASE("singlet closed form matches born_joint") {
    SUBCASE("frozen values") {
        CHECK(quantum::singlet_closed_form({Setting{0.0}, Setting{0.0}}, Kind::photon).corr ==
              doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(quantum::singlet_closed_form({Setting{M_PI / 8}, Setting{0.0}}, Kind::photon)
                  .corr == doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-12));
        CHECK(std::abs(
                  quantum::singlet_closed_form({Setting{M_PI / 2}, Setting{0.0}}, Kind::spin)
                      .corr) <= 1e-12);
    }
    SUBCASE("agreement over a sweep, both kinds") {
        for (Kind kind : {Kind::photon, Kind::spin}) {
            const auto singlet = quantum::singlet_state(kind);
            for (int i = 0; i < 50; ++i) {
                const SettingPair pair{Setting{0.3}, Setting{0.3 + 0.13 * i}};
                const auto s = summarize(quantum::born_joint(singlet, pair));
                const auto closed = quantum::singlet_closed_form(pair, kind);
                CHECK(std::abs(s.mean_a) <= 1e-12);
                CHECK(std::abs(s.mean_b) <= 1e-12);
                CHECK(s.corr == doctest::Approx(closed.corr).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("random pure states are unit norm and deterministic") {
    const auto a = quantum::random_pure_state(11);
    const auto b = quantum::random_pure_state(11);
    CHECK(a.amplitudes() == b.amplitudes());
    for (int i = 0; i < 50; ++i) {
        const auto state = quantum::random_pure_state(static_cast<std::uint64_t>(i));
        CHECK(state.squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("random states never violate the inequalities") {
    SplitMix64 master(7007);
    for (int i = 0; i < 200; ++i) {
        const auto state = quantum::random_pure_state(master.next_u64());
        const SettingPair pair{Setting{2.0 * M_PI * master.next_double01()},
                               Setting{2.0 * M_PI * master.next_double01()}};
        const auto rep = check_distribution(quantum::born_joint(state, pair));
        CHECK(rep.satisfied);
        CHECK(rep.upper_slack >= -1e-9);
        CHECK(rep.lower_slack >= -1e-9);
    }
}

TEST_CASE("basis rotation by the kind period leaves born_joint unchanged") {
    SplitMix64 master(8008);
    for (int i = 0; i < 50; ++i) {
        const Kind kind = i % 2 == 0 ? Kind::photon : Kind::spin;
        const double period = kind == Kind::photon ? M_PI : 2.0 * M_PI;
        const auto state = quantum::random_pure_state(master.next_u64(), kind);
        const SettingPair pair{Setting{2.0 * M_PI * master.next_double01()},
                               Setting{2.0 * M_PI * master.next_double01()}};
        const auto base = quantum::born_joint(state, pair);
        const auto shifted_a =
            quantum::born_joint(state, {Setting{pair.a.angle + period}, pair.b});
        const auto shifted_b =
            quantum::born_joint(state, {pair.a, Setting{pair.b.angle + period}});
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(shifted_a.entries()[c] ==
                  doctest::Approx(base.entries()[c]).epsilon(1e-12));
            CHECK(shifted_b.entries()[c] ==
                  doctest::Approx(base.entries()[c]).epsilon(1e-12));
        }
    }
}

TEST_CASE("canonical angle folds into the kind domain") {
    CHECK(canonical_angle(M_PI + 0.25, Kind::photon) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(canonical_angle(-0.25, Kind::photon) == doctest::Approx(M_PI - 0.25).epsilon(1e-12));
    CHECK(canonical_angle(2.0 * M_PI + 0.5, Kind::spin) == doctest::Approx(0.5).epsilon(1e-12));
}
