#include "leggett/numeric.hpp"

#include <cctype>
#include <cstddef>

namespace leggett {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto fail = [&]() -> Rational {
        throw Error("cannot parse rational from \"" + text + "\"");
    };

    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    if (s.empty()) return fail();

    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return fail();
        BigInt d(den);
        if (d == 0) return fail();
        value = Rational(BigInt(num), d);
    } else {
        // decimal form: digits [. digits] [e sign digits]
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string::npos) {
            const std::string exp_part = s.substr(e + 1);
            s.erase(e);
            std::string digits = exp_part;
            bool exp_neg = false;
            if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
                exp_neg = digits[0] == '-';
                digits.erase(0, 1);
            }
            if (!all_digits(digits) || digits.size() > 6) return fail();
            exponent = std::stol(digits);
            if (exp_neg) exponent = -exponent;
        }
        std::string mantissa = s;
        std::size_t frac_digits = 0;
        if (auto dot = s.find('.'); dot != std::string::npos) {
            mantissa = s.substr(0, dot) + s.substr(dot + 1);
            frac_digits = s.size() - dot - 1;
        }
        if (!all_digits(mantissa)) return fail();
        value = Rational(BigInt(mantissa));
        long shift = exponent - static_cast<long>(frac_digits);
        BigInt ten(10);
        for (long i = 0; i < shift; ++i) value *= ten;
        for (long i = 0; i > shift; --i) value /= ten;
    }
    return negative ? Rational(-value) : value;
}

} // namespace leggett
