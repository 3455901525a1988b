#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rootgap {

enum class ErrorKind {
  ParameterDomain,
  EmptyProblem,
  FamilyMismatch,
  SingularConfiguration,
  Magnitude,
  Convergence,
  InternalConsistency,
  Precondition,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base exception for everything thrown by the library. The kind lets the
/// CLI map failures onto exit codes without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures of the numerics (as opposed to bad input).
  bool is_numerical() const noexcept;

private:
  ErrorKind kind_;
};

class ConvergenceError : public Error {
public:
  ConvergenceError(std::size_t stuck_index, const std::string& what);
  std::size_t stuck_index() const noexcept { return stuck_index_; }

private:
  std::size_t stuck_index_;
};

class MagnitudeError : public Error {
public:
  /// `binary_exponent` is the power of two by which the true value exceeds
  /// the representable range.
  MagnitudeError(long binary_exponent, const std::string& what);
  long binary_exponent() const noexcept { return binary_exponent_; }

private:
  long binary_exponent_;
};

}  // namespace rootgap
