#pragma once

#include <stdexcept>
#include <string>

namespace qglab {

enum class ErrorKind {
    DimensionMismatch,
    AxiomViolation,
    ParseError,
    NotAGroup,
    NoHaarState,
    NonUniqueHaar,
    NotPositive,
    HomeMismatch,
    NotAState,
    ZeroMass,
    NotAProjection,
    NotIdempotent,
    NotASubalgebra,
    NotACoideal,
    NoConvergence,
    CriteriaDisagree,
    ConventionFailure,
};

const char* to_string(ErrorKind kind);

// Errors that indicate bad input, as opposed to a broken internal invariant.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace qglab
