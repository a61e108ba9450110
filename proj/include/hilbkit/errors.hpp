#pragma once

#include <stdexcept>
#include <string>

namespace hilbkit {

/// Base class for all domain errors raised by the library. CLI maps these
/// to exit code 1; anything else (bad flags, malformed JSON) is usage.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exponent vectors of different lengths were mixed in one operation.
struct DimensionMismatchError : Error {
  using Error::Error;
};

/// homogenize() called with a target degree below the monomial degree.
struct DegreeOverflowError : Error {
  using Error::Error;
};

/// A monomial set that is not connected to 1 (or otherwise not a basis).
struct InvalidBasisError : Error {
  using Error::Error;
};

/// A border-coefficient table missing entries for some (alpha, beta).
struct IncompleteCoefficientsError : Error {
  using Error::Error;
};

/// An operation that is only defined on the chart (commuting matrices)
/// was invoked at a non-commuting point.
struct NotCommutingError : Error {
  using Error::Error;
};

/// Subspace of the wrong codimension handed to a quotient constructor.
struct CodimensionError : Error {
  using Error::Error;
};

/// Degenerate point configuration (singular evaluation matrix, repeated
/// points, wrong conditions rank).
struct FixtureError : Error {
  using Error::Error;
};

/// Coordinate vector that violates the Pluecker relations where a
/// Grassmannian point is required.
struct NotAGrassmannianPointError : Error {
  using Error::Error;
};

}  // namespace hilbkit
