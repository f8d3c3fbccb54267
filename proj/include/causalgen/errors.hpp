#pragma once

#include <stdexcept>
#include <string>

namespace causalgen {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Config document defects, split so callers can distinguish typos from
// structural problems.
struct SyntaxError : ParseError {
    using ParseError::ParseError;
};
struct UnknownKeyError : ParseError {
    using ParseError::ParseError;
};
struct TypeMismatchError : ParseError {
    using ParseError::ParseError;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UniverseMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LagOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingPrediction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace causalgen
