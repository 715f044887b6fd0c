#pragma once

#include <stdexcept>
#include <string>

namespace chow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContextMismatch : Error {
    using Error::Error;
};

struct UnknownVariable : Error {
    using Error::Error;
};

struct NotMonic : Error {
    using Error::Error;
};

struct NotSymmetric : Error {
    using Error::Error;
};

// Raised when a division that must be exact (denominator clearing,
// integer content, degree of a covering map) leaves a remainder.
// Each site reports which stage failed.
struct ExactnessError : Error {
    enum class Stage { denominator, integer_division, symmetry };
    Stage stage;
    ExactnessError(Stage s, const std::string& msg) : Error(msg), stage(s) {}
};

struct SliceLimitExceeded : Error {
    using Error::Error;
};

struct UnsupportedPresentation : Error {
    using Error::Error;
};

struct SizeGuard : Error {
    using Error::Error;
};

} // namespace chow
