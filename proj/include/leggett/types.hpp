// Basic domain vocabulary: dichotomic outcomes, analyzer settings, the four
// joint-outcome cells, and the provenance tag that records whether a
// correlator triple came from a single distribution or from mixed sources.
#pragma once

#include <cmath>
#include <optional>
#include <string_view>

#include "leggett/errors.hpp"

namespace leggett {

// A measured value restricted to {-1, +1}.
class Outcome {
public:
    explicit Outcome(int value) : value_(value) {
        if (value != 1 && value != -1)
            throw OutOfRange("outcome must be +1 or -1, got " + std::to_string(value));
    }
    static Outcome plus() { return Outcome(1); }
    static Outcome minus() { return Outcome(-1); }
    int value() const { return value_; }

private:
    int value_;
};

// Physical convention for mapping analyzer angles to measurement bases.
// photon: polarization, period pi, correlations go as cos 2(a-b)
// spin:   spin-1/2, period 2*pi, correlations go as cos(a-b)
enum class Kind { photon, spin };

inline double kind_factor(Kind k) { return k == Kind::photon ? 2.0 : 1.0; }

inline std::string_view kind_name(Kind k) {
    return k == Kind::photon ? "photon" : "spin";
}

// Analyzer setting in radians, stored exactly as given.
struct Setting {
    double angle = 0.0;
};

inline bool operator==(const Setting& lhs, const Setting& rhs) {
    return lhs.angle == rhs.angle;
}

struct SettingPair {
    Setting a;
    Setting b;
};

inline bool operator==(const SettingPair& lhs, const SettingPair& rhs) {
    return lhs.a == rhs.a && lhs.b == rhs.b;
}

// Folds an angle into the kind's fundamental domain, [0, pi) for photon and
// [0, 2*pi) for spin. Display helper only; stored settings are never touched.
inline double canonical_angle(double angle, Kind kind) {
    const double period = kind == Kind::photon ? M_PI : 2.0 * M_PI;
    double folded = std::fmod(angle, period);
    if (folded < 0.0) folded += period;
    return folded;
}

// Joint-outcome cells in the fixed order used everywhere: (A,B) =
// (+,+), (+,-), (-,+), (-,-).
enum class Cell { pp = 0, pm = 1, mp = 2, mm = 3 };

inline std::string_view cell_name(Cell c) {
    switch (c) {
        case Cell::pp: return "++";
        case Cell::pm: return "+-";
        case Cell::mp: return "-+";
        case Cell::mm: return "--";
    }
    return "?";
}

enum class Provenance { single_distribution, mixed };

inline std::string_view provenance_name(Provenance p) {
    return p == Provenance::single_distribution ? "single-distribution" : "mixed";
}

} // namespace leggett
