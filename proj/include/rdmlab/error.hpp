#pragma once

#include <stdexcept>
#include <string>

namespace rdmlab {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  ParseError,
  IoError,
  DenseLimitExceeded,
  NotEigenstate,
  NoValidCoupling,
  NumericalFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

/// Thrown when a certification is asked about a state that is not an
/// eigenstate of the operator at hand; carries the offending residual.
class NotEigenstateError : public Error {
public:
  explicit NotEigenstateError(double residual, const std::string& message)
      : Error(ErrorCode::NotEigenstate, message), residual_(residual) {}

  double residual() const { return residual_; }

private:
  double residual_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rdmlab
