#ifndef JUMPLOCI_ERRORS_HPP
#define JUMPLOCI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jumploci {

enum class ErrorCode {
  NonHomogeneous,
  NotDivisible,
  IncompatibleDegrees,
  CoincidentPoints,
  NotInSpan,
  NotSubspace,
  NonReducedSuspected,
  MdrZero,
  GeneratorBoundExceeded,
  InternalInconsistency,
  VerificationMismatch,
  BoundTooSmall,
  ResultantDegenerate,
  UnexpectedZeroDeterminant,
  DivisibilityFailure,
  DegreeFormulaMismatch,
  AllRestrictionsZero,
  FieldMismatch,
  DivisionByZero,
  InvalidField,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace jumploci

#endif
