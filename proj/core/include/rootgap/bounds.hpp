#pragma once

// Root-gap and boundary-distance bounds derived from the inverse covariance
// spectra, together with comparator bounds from the literature. Each check
// becomes a BoundReport row.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rootgap/roots.hpp"

namespace rootgap {

/// Derived bounds are proven and must hold; comparators are literature
/// statements that are tabulated but never gate anything.
enum class BoundKind { Derived, Comparator };

enum class BoundStatus {
  Evaluated,
  NotApplicable,  // parameters outside the formula's range
  Vacuous,        // lower bound <= 0, nothing is asserted
};

/// Lower: observed >= bound.  Upper: observed <= bound.
enum class BoundDirection { Lower, Upper };

std::string_view to_string(BoundKind k) noexcept;
std::string_view to_string(BoundStatus s) noexcept;
std::string_view to_string(BoundDirection d) noexcept;

/// Ratio of this report's bound to another bound evaluated at the same point.
struct ReferenceRatio {
  std::string reference_id;
  double ratio = 0.0;
};

struct BoundReport {
  std::string bound_id;
  PolynomialFamily family = PolynomialFamily::hermite();
  std::size_t n = 0;
  std::optional<std::size_t> index;  // 1-based root or gap index
  BoundKind kind = BoundKind::Derived;
  BoundStatus status = BoundStatus::Evaluated;
  BoundDirection direction = BoundDirection::Lower;
  double bound_value = 0.0;
  double observed_value = 0.0;
  // Signed so that slack >= 0 means the inequality holds: observed - bound
  // for lower bounds, bound - observed for upper bounds.
  double slack = 0.0;
  bool holds = true;
  // observed/bound for lower bounds and bound/observed for upper bounds, so
  // that a satisfied inequality always has sharpness >= 1.
  double sharpness = 0.0;
  std::vector<ReferenceRatio> references;

  /// True for the rows that decide pass/fail: evaluated derived bounds.
  bool gates() const noexcept { return kind == BoundKind::Derived && status == BoundStatus::Evaluated; }
};

struct BoundOptions {
  // holds <=> slack >= -tolerance * max(|bound|, 1)
  double tolerance = 1e-10;
};

/// Closed-form right-hand sides. N is the polynomial degree; M the spectral
/// radius of the Jacobi S_N (see max_eigenvalue).
namespace formula {
double hermite_diag_sq(std::size_t n);      // (N-1)^3 / N
double hermite_inv4_sum(std::size_t n);     // (N-1)^3 / (2N)
double hermite_inv4_sum_weak(std::size_t n);
double hermite_inv2_sum(std::size_t n);     // (N-1)^{3/2} / N^{1/2}
double hermite_inv2_sum_weak(std::size_t n);
double hermite_gap(std::size_t n);          // (2N)^{1/4} / (N-1)^{3/4}
double hermite_gap_weak(std::size_t n);     // 2^{1/4} / (N-1)^{1/2}
double hermite_gap_k2(std::size_t n);       // 2 / sqrt(N)

double laguerre_diag_sq(std::size_t n);                   // (2N-1)^2
double laguerre_smallest_root(double nu, std::size_t n);  // nu / (2N-1)
double laguerre_gap(double nu, std::size_t n);
double laguerre_gap_weak(double nu, std::size_t n);
double laguerre_gap_szego(double nu, std::size_t n);  // requires nu >= 1
double laguerre_gap_szego_weak(double nu, std::size_t n);
double laguerre_sqrt_gap(std::size_t n);              // 1 / sqrt(2N-1)
double laguerre_smallest_root_szego(double nu, std::size_t n);
double laguerre_gap_cd(double nu, std::size_t n);
double laguerre_gap_k2(double nu, std::size_t n);
double laguerre_gap_jt(double nu, std::size_t n);

double jacobi_diag_sq(double m);  // M^2
double jacobi_right_boundary(double alpha, double beta, double m);
double jacobi_right_boundary_weak(double alpha, double m);
double jacobi_left_boundary(double alpha, double beta, double m);
double jacobi_left_boundary_weak(double beta, double m);
double jacobi_one_minus_sq(double alpha, double beta, double m);
double jacobi_one_minus_sq_symmetric(double alpha, double m);
double jacobi_gap(double alpha, double beta, double m);
double jacobi_gap_symmetric(double alpha, double m);
double jacobi_right_boundary_asymptotic(double alpha, double beta, std::size_t n);
}  // namespace formula

/// Per-root diagonal bound, the two sum bounds and the per-gap bound (each
/// with its weaker form), plus the 2/sqrt(N) comparator. Requires N >= 2.
std::vector<BoundReport> hermite_diag_bound(const RootVector& z, const BoundOptions& opt = {});

/// Diagonal bound, smallest-root bound, both gap bounds (the second only for
/// nu >= 1) and the square-root gap bound.
std::vector<BoundReport> laguerre_bounds(const RootVector& z, const BoundOptions& opt = {});

/// Four literature comparators, with ratios against the derived bounds.
std::vector<BoundReport> laguerre_comparators(const RootVector& z, const BoundOptions& opt = {});

std::vector<BoundReport> jacobi_bounds(const RootVector& z, const BoundOptions& opt = {});

/// Leading term of the large-N asymptotic for 1 - z_N (alpha, beta > -1/2).
BoundReport jacobi_comparator(const RootVector& z, const BoundOptions& opt = {});

/// Every derived bound and comparator for the root vector's family.
std::vector<BoundReport> all_bounds(const RootVector& z, const BoundOptions& opt = {});

struct BoundSharpness {
  std::string bound_id;
  std::size_t count = 0;
  double worst = 0.0;  // smallest sharpness seen
  double mean = 0.0;
};

struct SharpnessSummary {
  bool empty = true;
  std::optional<PolynomialFamily> family;
  std::size_t n = 0;
  std::vector<BoundSharpness> per_bound;  // sorted by bound_id
  // Sum of the per-root diagonal left-hand sides over its exact total;
  // Hermite and Laguerre only. Equal to 1 by the trace-of-square identity.
  std::optional<double> aggregate_ratio;
};

/// Reports must all share one family and N; throws Precondition otherwise.
SharpnessSummary sharpness_summary(const std::vector<BoundReport>& reports);

}  // namespace rootgap
