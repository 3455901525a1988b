#pragma once

// Inverse covariance matrices S_N of the freezing-regime CLTs for the
// Hermite, Laguerre and Jacobi beta-ensembles. Their entries are rational
// functions of the polynomial roots and their spectra are known in closed
// form, which is what every bound in bounds.hpp is built on.

#include <cstddef>
#include <string>
#include <vector>

#include "rootgap/eigensolve.hpp"
#include "rootgap/roots.hpp"

namespace rootgap {

/// Z: entries written in the Laguerre roots z_i.
/// SqrtR: the same entries written in r_i = sqrt(2 z_i).
enum class LaguerreCoordinate { Z, SqrtR };

struct InverseCovariance {
  RootVector roots;
  DenseSymmetric matrix;
  std::vector<double> predicted;  // closed-form spectrum, ascending
  LaguerreCoordinate coordinate = LaguerreCoordinate::Z;

  const PolynomialFamily& family() const noexcept { return roots.family; }
  std::size_t n() const noexcept { return roots.n; }
};

/// s_ii = 1 + sum_{l != i} (z_i - z_l)^-2,  s_ij = -(z_i - z_j)^-2.
/// Spectrum {1, ..., N}. N = 1 gives [[1]].
InverseCovariance hermite_S(const RootVector& z);

/// Spectrum {2, 4, ..., 2N} in either coordinate system.
InverseCovariance laguerre_S(const RootVector& z, LaguerreCoordinate coordinate = LaguerreCoordinate::Z);

/// Jacobi form in (alpha, beta); spectrum 2j(2N + alpha + beta + 1 - j).
InverseCovariance jacobi_S(const RootVector& z);

/// Dispatches on the root vector's family (Laguerre in Z coordinates).
InverseCovariance inverse_covariance(const RootVector& z);

namespace detail {
/// Jacobi form in the ensemble parameters (a, b), with alpha = a + b - 1 and
/// beta = b - 1. Kept to cross-check the (alpha, beta) transcription.
InverseCovariance jacobi_S_ensemble(const RootVector& z, double a, double b);
}  // namespace detail

std::vector<double> predicted_spectrum(const PolynomialFamily& family, std::size_t n);

/// max_j 2j(2N + alpha + beta + 1 - j) by direct scan over j = 1..N.
double max_eigenvalue(double alpha, double beta, std::size_t n);

/// Diagonal of (S - I)^2 for Hermite/Laguerre and of S^2 for Jacobi.
struct DiagOfSquare {
  std::vector<double> values;       // from the matrix product
  std::vector<double> closed_form;  // from the root-difference sums
  double max_rel_discrepancy = 0.0;
};

/// Computes both routes; throws InternalConsistency if they differ by more
/// than 1e-10 relative.
DiagOfSquare diag_of_square(const InverseCovariance& s);

namespace detail {
/// Both routes without the consistency check (used by the verifier, which
/// reports the discrepancy instead of throwing).
DiagOfSquare diag_of_square_unchecked(const InverseCovariance& s);
}  // namespace detail

/// Closed-form diagonal of the (shifted) square, straight from the roots:
///   Hermite  (sum d^-2)^2 + sum d^-4
///   Laguerre (nu/z_i + 2 sum (z_i+z_l)/d^2)^2 + 16 sum z_i z_l / d^4
///   Jacobi   (4 sum (1-z_i^2)/d^2 + 2(alpha+1)(1+z_i)/(1-z_i) + 2(beta+1)(1-z_i)/(1+z_i))^2
///            + 16 sum (1-z_l^2)(1-z_i^2)/d^4
/// with d = z_i - z_l and sums over l != i.
std::vector<double> diag_of_square_closed_form(const RootVector& z);

/// A trace identity: `lhs` is a root-difference sum, `rhs` its exact value.
struct TraceIdentity {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_residual() const noexcept;
};

/// Hermite: sum_{i!=l} (z_i-z_l)^-2 = N(N-1)/2 and
///          sum_i a_ii^(2) = N(N-1)(2N-1)/6.
/// Laguerre: nu sum 1/z_i + 2 sum_{i!=l} (z_i+z_l)/(z_i-z_l)^2 = N^2 and
///           sum_i a_ii^(2) = N(2N-1)(2N+1)/3.
/// Jacobi: tr S_N = sum_j lambda_j.
std::vector<TraceIdentity> trace_identities(const InverseCovariance& s);

/// Tolerance on max relative eigenvalue error for the spectral check.
double spectral_tolerance(const PolynomialFamily& family, std::size_t n);

struct SpectralMatch {
  std::vector<double> computed;
  double max_rel_error = 0.0;
  double tolerance = 0.0;
  bool passed() const noexcept { return max_rel_error <= tolerance; }
};

SpectralMatch spectral_match(const InverseCovariance& s);

/// max_ij |x_ij - y_ij| / max(|x_ij|, |y_ij|), with 0/0 read as 0.
double max_entrywise_rel_difference(const DenseSymmetric& x, const DenseSymmetric& y);

}  // namespace rootgap
