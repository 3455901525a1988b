#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rootgap/family.hpp"

namespace rootgap {

/// Index convention for a root vector. Hermite and Laguerre roots are stored
/// largest first (z_1 > ... > z_N); Jacobi roots smallest first
/// (z_1 < ... < z_N). Bound formulas index into the vector literally.
enum class RootOrdering { DescendingHermite, DescendingLaguerre, AscendingJacobi };

RootOrdering ordering_for(FamilyKind kind) noexcept;

struct RootVector {
  PolynomialFamily family = PolynomialFamily::hermite();
  std::size_t n = 0;
  std::vector<double> roots;
  RootOrdering ordering = RootOrdering::DescendingHermite;
  // polish_skipped[i] is set when Newton refinement left the bracket and the
  // unpolished eigenvalue was kept.
  std::vector<bool> polish_skipped;

  std::size_t size() const noexcept { return roots.size(); }
  double operator[](std::size_t i) const noexcept { return roots[i]; }
  bool descending() const noexcept { return ordering != RootOrdering::AscendingJacobi; }
};

/// Laguerre roots in the coordinates r_i = sqrt(2 z_i), same (descending) order.
struct SqrtRootVector {
  std::vector<double> r;
};

/// Roots of P_n: Golub-Welsch eigenvalues, each refined by at most three
/// Newton steps confined to half the distance to its nearest neighbour, then
/// placed in the family's ordering.
RootVector compute_roots(const PolynomialFamily& family, std::size_t n);

SqrtRootVector to_sqrt_coordinates(const RootVector& rv);

struct GapStatistics {
  // nullopt for n == 1: there is no pair of roots.
  std::optional<double> min_gap;
  // Laguerre: smallest root (distance to 0). Jacobi: 1 + smallest root.
  std::optional<double> boundary_low;
  // Jacobi only: 1 - largest root.
  std::optional<double> boundary_high;
};

GapStatistics gap_statistics(const RootVector& rv);

}  // namespace rootgap
