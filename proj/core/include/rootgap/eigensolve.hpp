#pragma once

// Symmetric eigenvalue solvers with no external linear-algebra dependency:
// implicit-shift QL for tridiagonal matrices and cyclic Jacobi rotations for
// dense symmetric ones.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "rootgap/family.hpp"

namespace rootgap {

/// Dense symmetric matrix, stored fully (row-major). Every mutation writes
/// both triangles so the stored matrix is exactly symmetric.
class DenseSymmetric {
public:
  explicit DenseSymmetric(std::size_t n);

  static DenseSymmetric identity(std::size_t n);
  static DenseSymmetric diagonal(std::span<const double> values);
  /// Throws Precondition unless `rows` is square and exactly symmetric.
  static DenseSymmetric from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static DenseSymmetric from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) noexcept {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }
  std::span<const double> row(std::size_t i) const noexcept { return {a_.data() + i * n_, n_}; }

  double trace() const noexcept;
  double max_abs() const noexcept;

  /// this + shift * I
  DenseSymmetric shifted(double shift) const;

  friend bool operator==(const DenseSymmetric&, const DenseSymmetric&) = default;

private:
  std::size_t n_;
  std::vector<double> a_;
};

/// Ascending eigenvalues plus a backward-error estimate: the largest
/// off-diagonal mass discarded when eigenvalues were accepted.
struct Spectrum {
  std::vector<double> eigenvalues;
  double residual = 0.0;
};

/// Implicit QL with Wilkinson shifts. An off-diagonal entry e_i is deflated
/// once |e_i| <= eps * (|d_i| + |d_{i+1}|). Throws ConvergenceError after
/// 50 * n QL iterations.
Spectrum tridiag_eigenvalues(const SymTridiagonal& t);

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls below
/// eps * ||m||_F. Throws ConvergenceError after 50 * n sweeps.
Spectrum dense_eigenvalues(const DenseSymmetric& m);

/// m^2, formed by explicit multiplication.
DenseSymmetric square(const DenseSymmetric& m);

/// tr(m^k) from explicit matrix powers (binary powering), independent of any
/// eigen-decomposition. Throws MagnitudeError if an intermediate overflows.
double trace_power(const DenseSymmetric& m, unsigned k);

}  // namespace rootgap
