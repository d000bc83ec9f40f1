#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition on an argument was violated (omega <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data or configuration (bad optical table, bad grid, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A sum or integral failed to converge within its budget. Carries the
/// diagnostics the failing routine could collect.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::string diagnostics)
      : Error(what + " [" + diagnostics + "]"), diagnostics_(std::move(diagnostics)) {}
  explicit ConvergenceError(const std::string& what) : Error(what) {}
  const std::string& diagnostics() const { return diagnostics_; }

 private:
  std::string diagnostics_;
};

/// The requested evaluation is outside what the model can represent
/// (e.g. real-axis permittivity of tabulated data above the extrapolation tail).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace casimir
