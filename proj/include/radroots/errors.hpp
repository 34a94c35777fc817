#pragma once

// Exception hierarchy shared by the whole library.
//
// The base classes group errors by how a command-line driver should exit:
//   ParseError         -> malformed textual input            (exit 2)
//   PreconditionError  -> a method's entry requirement fails (exit 3)
//   CertificationError -> a produced result fails its bound  (exit 4)
//   NonConvergence     -> the numeric root iteration stalled (exit 5)

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radroots {

/// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomial expressions, rationals, documents).
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  explicit ParseError(const std::string& what) : Error(what), position(0) {}
  std::size_t position;
};

/// More than one distinct variable symbol in a polynomial expression.
struct MixedVariables : ParseError {
  using ParseError::ParseError;
};

/// An operation's entry requirement does not hold for the given input.
struct PreconditionError : Error {
  using Error::Error;
};

struct DivisionByZeroPolynomial : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// Degree too small for the requested operation (includes the zero polynomial).
struct DegreeTooLow : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// Degree differs from the one the operation is specific to.
struct DegreeMismatch : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// Degree outside the range any implemented method covers.
struct DegreeUnsupported : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NotPalindromic : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct OddDegree : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NotMonic : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// Two quadratic factors coincide, so a simple-pole decomposition is impossible.
struct RepeatedFactor : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// |alpha| = 2: the quadratic y^2 + alpha y + 1 degenerates to a square.
struct BoundaryAlpha : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// Two sequences that must have equal length do not.
struct LengthMismatch : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// A computed result violates its stated residual/consistency bound.
struct CertificationError : Error {
  using Error::Error;
};

/// The numeric root iteration did not reach its residual bound.
/// Carries the best iterate so callers can inspect how close it got.
struct NonConvergence : Error {
  NonConvergence(const std::string& what, std::vector<std::complex<double>> roots,
                 std::vector<double> residuals)
      : Error(what), best_roots(std::move(roots)), residuals(std::move(residuals)) {}
  std::vector<std::complex<double>> best_roots;
  std::vector<double> residuals;
};

}  // namespace radroots
