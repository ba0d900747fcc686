#include "qglab/errors.hpp"

namespace qglab {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::AxiomViolation: return "AxiomViolation";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NotAGroup: return "NotAGroup";
        case ErrorKind::NoHaarState: return "NoHaarState";
        case ErrorKind::NonUniqueHaar: return "NonUniqueHaar";
        case ErrorKind::NotPositive: return "NotPositive";
        case ErrorKind::HomeMismatch: return "HomeMismatch";
        case ErrorKind::NotAState: return "NotAState";
        case ErrorKind::ZeroMass: return "ZeroMass";
        case ErrorKind::NotAProjection: return "NotAProjection";
        case ErrorKind::NotIdempotent: return "NotIdempotent";
        case ErrorKind::NotASubalgebra: return "NotASubalgebra";
        case ErrorKind::NotACoideal: return "NotACoideal";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::CriteriaDisagree: return "CriteriaDisagree";
        case ErrorKind::ConventionFailure: return "ConventionFailure";
    }
    return "Unknown";
}

bool is_input_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch:
        case ErrorKind::AxiomViolation:
        case ErrorKind::ParseError:
        case ErrorKind::NotAGroup:
        case ErrorKind::NoHaarState:
        case ErrorKind::NonUniqueHaar:
        case ErrorKind::NotPositive:
        case ErrorKind::HomeMismatch:
        case ErrorKind::NotAState:
        case ErrorKind::ZeroMass:
        case ErrorKind::NotAProjection:
        case ErrorKind::NotIdempotent:
        case ErrorKind::NotASubalgebra:
            return true;
        default:
            return false;
    }
}

}  // namespace qglab
