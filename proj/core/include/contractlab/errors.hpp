#pragma once

#include <stdexcept>
#include <string>

namespace contractlab {

/// Base class for all contractlab errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An input exceeds a documented brute-force or precision guard.
struct SizeError : Error {
  using Error::Error;
};

/// Invalid construction parameters (bad cost range, bad epsilon, ...).
struct ParameterError : Error {
  using Error::Error;
};

/// Intersection contract requested for two sets with equal reward.
struct DegeneratePairError : Error {
  using Error::Error;
};

/// Malformed instance or report file.
struct ParseError : Error {
  using Error::Error;
};

/// Ill-formed LP model (e.g. zero degree estimate inside H).
struct ModelError : Error {
  using Error::Error;
};

/// Numerical failure inside the LP solver.
struct SolverError : Error {
  using Error::Error;
};

/// A contract of an internal component was violated (tripwire, not user error).
struct InternalError : Error {
  using Error::Error;
};

}  // namespace contractlab
