// Scalar backends for the inequality machinery.
//
// Every check runs in one of two modes:
//   exact  — arbitrary-precision rationals, all identities hold with zero
//            tolerance;
//   float  — IEEE doubles for quantum-generated inputs, with the tolerance
//            budget below (double-precision accumulation over <= 16 terms).
//
// NumericPolicy<T> centralizes the per-mode tolerances so the generic code
// never hard-codes an epsilon.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "leggett/errors.hpp"

namespace leggett {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <typename T>
struct NumericPolicy;

template <>
struct NumericPolicy<double> {
    static constexpr bool exact = false;
    // Entries in [entry_floor, 0) are treated as rounding noise and clamped.
    static double entry_floor() { return -1e-12; }
    static double sum_tolerance() { return 1e-9; }
    static double comparison_tolerance() { return 1e-12; }
    static bool finite(double x) { return std::isfinite(x); }
};

template <>
struct NumericPolicy<Rational> {
    static constexpr bool exact = true;
    static Rational entry_floor() { return Rational(0); }
    static Rational sum_tolerance() { return Rational(0); }
    static Rational comparison_tolerance() { return Rational(0); }
    static bool finite(const Rational&) { return true; }
};

template <typename T>
inline T abs_value(const T& x) {
    using std::abs;
    return T(abs(x));
}

// |x - y| <= mode tolerance (exact mode: x == y).
template <typename T>
inline bool values_agree(const T& x, const T& y) {
    return abs_value<T>(T(x - y)) <= NumericPolicy<T>::comparison_tolerance();
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline std::string scalar_to_string(const Rational& x) { return x.str(); }

// Parses "3/4", "-2", "0.25" or "1.5e-3" into an exact rational.
Rational parse_rational(const std::string& text);

} // namespace leggett
