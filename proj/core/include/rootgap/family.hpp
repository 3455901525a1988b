#pragma once

// Classical orthogonal polynomial families: parameters, recurrence (Jacobi)
// matrices and point evaluation.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rootgap {

enum class FamilyKind { Hermite, Laguerre, Jacobi };

std::string_view to_string(FamilyKind kind) noexcept;

/// Parameter record for one of the three classical families.
///
///  - Hermite:  H_N, weight e^{-x^2} on the real line.
///  - Laguerre: L_N^{(nu-1)}, weight e^{-x} x^{nu-1} on (0, inf), nu > 0.
///  - Jacobi:   P_N^{(alpha,beta)}, weight (1-x)^alpha (1+x)^beta on (-1, 1),
///              alpha, beta > -1.
///
/// Instances can only be obtained through the factories, which reject
/// parameters outside these ranges.
class PolynomialFamily {
public:
  static PolynomialFamily hermite() noexcept;
  static PolynomialFamily laguerre(double nu);
  static PolynomialFamily jacobi(double alpha, double beta);

  FamilyKind kind() const noexcept { return kind_; }
  bool is(FamilyKind k) const noexcept { return kind_ == k; }

  // Meaningful only for the matching kind; zero otherwise.
  double nu() const noexcept { return nu_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// Comma-free parameter label, e.g. "nu=2" or "alpha=1;beta=-0.9".
  std::string params_label() const;

  friend auto operator<=>(const PolynomialFamily&, const PolynomialFamily&) = default;

private:
  PolynomialFamily(FamilyKind kind, double nu, double alpha, double beta) noexcept
      : kind_(kind), nu_(nu), alpha_(alpha), beta_(beta) {}

  FamilyKind kind_;
  double nu_;
  double alpha_;
  double beta_;
};

/// Symmetric tridiagonal matrix stored as its diagonal and first
/// off-diagonal. Off-diagonal entries are strictly positive.
class SymTridiagonal {
public:
  SymTridiagonal(std::vector<double> diag, std::vector<double> offdiag);

  std::size_t size() const noexcept { return diag_.size(); }
  const std::vector<double>& diag() const noexcept { return diag_; }
  const std::vector<double>& offdiag() const noexcept { return offdiag_; }

private:
  std::vector<double> diag_;
  std::vector<double> offdiag_;
};

/// Recurrence matrix of the monic family: its eigenvalues are the roots of P_n.
SymTridiagonal jacobi_matrix(const PolynomialFamily& family, std::size_t n);

/// P_n(x) and P_n'(x) in the standard (Szego) normalization, possibly scaled
/// by a common power of two to stay inside the double range.
struct Evaluation {
  double value = 0.0;
  double derivative = 0.0;
  // True quantities are value * 2^exponent and derivative * 2^exponent.
  long exponent = 0;

  double newton_step() const noexcept { return value / derivative; }
  // Throw MagnitudeError when the unscaled quantity is not representable.
  double true_value() const;
  double true_derivative() const;
};

Evaluation evaluate_with_derivative(const PolynomialFamily& family, std::size_t n, double x);

}  // namespace rootgap
