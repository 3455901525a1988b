#include "rootgap/error.hpp"

namespace rootgap {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParameterDomain: return "parameter-domain";
    case ErrorKind::EmptyProblem: return "empty-problem";
    case ErrorKind::FamilyMismatch: return "family-mismatch";
    case ErrorKind::SingularConfiguration: return "singular-configuration";
    case ErrorKind::Magnitude: return "magnitude";
    case ErrorKind::Convergence: return "convergence-failure";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::Precondition: return "precondition";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

bool Error::is_numerical() const noexcept {
  switch (kind_) {
    case ErrorKind::Magnitude:
    case ErrorKind::Convergence:
    case ErrorKind::InternalConsistency:
    case ErrorKind::SingularConfiguration:
      return true;
    default:
      return false;
  }
}

ConvergenceError::ConvergenceError(std::size_t stuck_index, const std::string& what)
    : Error(ErrorKind::Convergence, what + " (stuck at index " + std::to_string(stuck_index) + ")"),
      stuck_index_(stuck_index) {}

MagnitudeError::MagnitudeError(long binary_exponent, const std::string& what)
    : Error(ErrorKind::Magnitude,
            what + " (value scaled by 2^" + std::to_string(binary_exponent) + ")"),
      binary_exponent_(binary_exponent) {}

}  // namespace rootgap
