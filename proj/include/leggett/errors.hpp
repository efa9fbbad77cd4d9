// Error types shared across the library. Every failure mode derives from
// Error so callers can catch one base; the CLI maps any Error to exit code 2.
// The class name is prefixed to the message so diagnostics stay identifiable
// after the type is erased.
#pragma once

#include <stdexcept>
#include <string>

namespace leggett {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define LEGGETT_DEFINE_ERROR(Name)                                       \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& detail)                         \
            : Error(std::string(#Name) + ": " + detail) {}               \
    }

LEGGETT_DEFINE_ERROR(NegativeProbability);
LEGGETT_DEFINE_ERROR(NotNormalized);
LEGGETT_DEFINE_ERROR(NonFinite);
LEGGETT_DEFINE_ERROR(OutOfRange);
LEGGETT_DEFINE_ERROR(InternalInconsistency);
LEGGETT_DEFINE_ERROR(ZeroVector);
LEGGETT_DEFINE_ERROR(SettingMismatch);
LEGGETT_DEFINE_ERROR(InvalidSampleSize);
LEGGETT_DEFINE_ERROR(ConfigError);

#undef LEGGETT_DEFINE_ERROR

} // namespace leggett
