#include "rootgap/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rootgap/eigensolve.hpp"
#include "rootgap/error.hpp"
#include "rootgap/format.hpp"

namespace rootgap {

RootOrdering ordering_for(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::Hermite: return RootOrdering::DescendingHermite;
    case FamilyKind::Laguerre: return RootOrdering::DescendingLaguerre;
    case FamilyKind::Jacobi: return RootOrdering::AscendingJacobi;
  }
  return RootOrdering::DescendingHermite;
}

namespace {

constexpr int kNewtonSteps = 3;

// Returns nullopt if an iterate leaves [lo, hi].
std::optional<double> newton_polish(const PolynomialFamily& family, std::size_t n, double x0, double lo,
                                    double hi) {
  double x = x0;
  for (int step = 0; step < kNewtonSteps; ++step) {
    const Evaluation ev = evaluate_with_derivative(family, n, x);
    if (ev.value == 0.0) break;
    if (ev.derivative == 0.0 || !std::isfinite(ev.derivative)) return std::nullopt;
    const double dx = ev.newton_step();
    const double next = x - dx;
    if (!(next >= lo && next <= hi)) return std::nullopt;
    if (next == x) break;
    x = next;
    if (std::abs(dx) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) break;
  }
  return x;
}

}  // namespace

RootVector compute_roots(const PolynomialFamily& family, std::size_t n) {
  const Spectrum spec = tridiag_eigenvalues(jacobi_matrix(family, n));
  const std::vector<double>& eig = spec.eigenvalues;  // ascending

  RootVector rv{family, n, std::vector<double>(n), ordering_for(family.kind()), std::vector<bool>(n, false)};
  std::vector<double> polished(n);
  for (std::size_t i = 0; i < n; ++i) {
    double half = std::numeric_limits<double>::infinity();
    if (i > 0) half = std::min(half, 0.5 * (eig[i] - eig[i - 1]));
    if (i + 1 < n) half = std::min(half, 0.5 * (eig[i + 1] - eig[i]));
    if (n == 1) half = 0.5 * std::max(1.0, std::abs(eig[i]));
    double lo = eig[i] - half;
    double hi = eig[i] + half;
    if (family.is(FamilyKind::Laguerre)) lo = std::max(lo, 0.0);
    if (family.is(FamilyKind::Jacobi)) {
      lo = std::max(lo, -1.0);
      hi = std::min(hi, 1.0);
    }
    const auto x = newton_polish(family, n, eig[i], lo, hi);
    polished[i] = x.value_or(eig[i]);
    if (!x) rv.polish_skipped[i] = true;
  }

  if (rv.descending()) {
    std::reverse(polished.begin(), polished.end());
    std::vector<bool> flags(rv.polish_skipped.rbegin(), rv.polish_skipped.rend());
    rv.polish_skipped = std::move(flags);
  }
  rv.roots = std::move(polished);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const bool ok = rv.descending() ? rv.roots[i] > rv.roots[i + 1] : rv.roots[i] < rv.roots[i + 1];
    if (!ok) throw Error(ErrorKind::InternalConsistency, "computed roots are not strictly ordered");
  }
  for (double z : rv.roots) {
    if (family.is(FamilyKind::Laguerre) && !(z > 0.0)) {
      throw Error(ErrorKind::InternalConsistency, "Laguerre root " + format_double(z) + " is not positive");
    }
    if (family.is(FamilyKind::Jacobi) && !(z > -1.0 && z < 1.0)) {
      throw Error(ErrorKind::InternalConsistency, "Jacobi root " + format_double(z) + " is outside (-1, 1)");
    }
  }
  return rv;
}

SqrtRootVector to_sqrt_coordinates(const RootVector& rv) {
  if (!rv.family.is(FamilyKind::Laguerre)) {
    throw Error(ErrorKind::FamilyMismatch, "square-root coordinates are defined for Laguerre roots only");
  }
  SqrtRootVector out;
  out.r.reserve(rv.size());
  for (double z : rv.roots) {
    if (!(z > 0.0)) throw Error(ErrorKind::ParameterDomain, "Laguerre root must be positive");
    out.r.push_back(std::sqrt(2.0 * z));
  }
  return out;
}

GapStatistics gap_statistics(const RootVector& rv) {
  if (rv.size() == 0) throw Error(ErrorKind::EmptyProblem, "root vector is empty");
  GapStatistics g;
  for (std::size_t i = 0; i + 1 < rv.size(); ++i) {
    const double gap = std::abs(rv[i] - rv[i + 1]);
    g.min_gap = g.min_gap ? std::min(*g.min_gap, gap) : gap;
  }
  const auto [lo_it, hi_it] = std::minmax_element(rv.roots.begin(), rv.roots.end());
  switch (rv.family.kind()) {
    case FamilyKind::Hermite:
      break;
    case FamilyKind::Laguerre:
      g.boundary_low = *lo_it;
      break;
    case FamilyKind::Jacobi:
      g.boundary_low = 1.0 + *lo_it;
      g.boundary_high = 1.0 - *hi_it;
      break;
  }
  return g;
}

}  // namespace rootgap
