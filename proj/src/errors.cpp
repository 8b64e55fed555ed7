#include "jumploci/errors.hpp"

namespace jumploci {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHomogeneous: return "NonHomogeneous";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::IncompatibleDegrees: return "IncompatibleDegrees";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::NotSubspace: return "NotSubspace";
    case ErrorCode::NonReducedSuspected: return "NonReducedSuspected";
    case ErrorCode::MdrZero: return "MdrZero";
    case ErrorCode::GeneratorBoundExceeded: return "GeneratorBoundExceeded";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::VerificationMismatch: return "VerificationMismatch";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::ResultantDegenerate: return "ResultantDegenerate";
    case ErrorCode::UnexpectedZeroDeterminant: return "UnexpectedZeroDeterminant";
    case ErrorCode::DivisibilityFailure: return "DivisibilityFailure";
    case ErrorCode::DegreeFormulaMismatch: return "DegreeFormulaMismatch";
    case ErrorCode::AllRestrictionsZero: return "AllRestrictionsZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace jumploci
