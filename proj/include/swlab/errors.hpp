#pragma once

#include <stdexcept>
#include <string>

namespace swlab {

// Failure categories surfaced by the library. The CLI maps Validation-type
// failures to exit code 2 and runtime/numerical failures to exit code 3.
enum class ErrorKind {
  Validation,          // bad arguments, malformed config, broken type invariant
  DepthViolation,      // water column thinner than h_min
  IllPosedMode,        // model parameters lose well-posedness on the grid
  SolveFailure,        // linear solver did not reach its residual target
  EigenFailure,        // mode problem factorization failed
  CflViolation,        // requested dt exceeds the stability bound
  NegativeEnstrophy,   // enstrophy left the admissible cone
  ConstraintDrift,     // elliptic constraint residual grew past its budget
  BoundaryUnsupported, // boundary condition not available for this model
  OutOfColumn,         // vertical sample outside [-1 + beta*b, eps*zeta]
  NotZeroMean,         // shear profile with nonzero vertical mean
  MismatchedRuns,      // comparing runs on different grids/time axes
  DegenerateFit,       // not enough (or degenerate) data for a rate fit
  FractionError,       // layer fractions do not partition the column
  StabilityViolation,  // non-finite state produced by a step
  Unsupported,         // feature/model combination deliberately not provided
  Io,                  // file read/write problem
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace swlab
