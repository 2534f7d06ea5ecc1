#pragma once

#include <stdexcept>
#include <string>

namespace hjrelax {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violations on operator inputs.
struct InvalidHamiltonian : Error {
  explicit InvalidHamiltonian(const std::string& what = "Hamiltonian must be coercive")
      : Error(what) {}
};
struct InvalidBoundary : Error {
  explicit InvalidBoundary(const std::string& what = "boundary function must be non-increasing")
      : Error(what) {}
};
struct NotSemiCoercive : Error {
  explicit NotSemiCoercive(const std::string& what =
                               "boundary function must be semi-coercive (no envelope fallback requested)")
      : Error(what) {}
};
struct InvalidInputs : Error {
  using Error::Error;
};

// Unbounded running envelopes.
struct UnboundedAbove : Error {
  explicit UnboundedAbove(const std::string& what = "supremum over right half-line is +infinity")
      : Error(what) {}
};
struct UnboundedBelow : Error {
  explicit UnboundedBelow(const std::string& what = "infimum over left half-line is -infinity")
      : Error(what) {}
};

// A theorem-level identity failed at runtime; always an implementation bug.
struct InternalMismatch : Error {
  using Error::Error;
};
struct RootNotFound : Error {
  using Error::Error;
};

// Solver configuration.
struct CflViolation : Error {
  using Error::Error;
};
struct DomainTooShort : Error {
  using Error::Error;
};

// CLI / ingestion.
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace hjrelax
