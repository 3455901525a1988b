#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "rootgap/eigensolve.hpp"
#include "rootgap/error.hpp"
#include "rootgap/roots.hpp"
#include "support.hpp"

using namespace rootgap;
using rootgap::testing::rel_diff;

namespace {

double nearest_spacing(const std::vector<double>& sorted, std::size_t i) {
  double s = std::numeric_limits<double>::infinity();
  if (i > 0) s = std::min(s, sorted[i] - sorted[i - 1]);
  if (i + 1 < sorted.size()) s = std::min(s, sorted[i + 1] - sorted[i]);
  return s;
}

}  // namespace

TEST_SUITE("roots") {

TEST_CASE("small closed forms") {
  const auto h = compute_roots(PolynomialFamily::hermite(), 2);
  CHECK(h.ordering == RootOrdering::DescendingHermite);
  CHECK(std::abs(h[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(h[1] + 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(*gap_statistics(h).min_gap - std::sqrt(2.0)) < 1e-15);

  CHECK(compute_roots(PolynomialFamily::hermite(), 1)[0] == 0.0);

  for (double nu : {0.1, 0.5, 1.0, 3.0, 50.0}) {
    const auto l = compute_roots(PolynomialFamily::laguerre(nu), 1);
    CHECK(rel_diff(l[0], nu) < 1e-15);
  }

  std::mt19937_64 rng(rootgap::testing::kSeed);
  std::uniform_real_distribution<double> p(-0.99, 20.0);
  for (int t = 0; t < 50; ++t) {
    const double a = p(rng);
    const double b = p(rng);
    const auto j = compute_roots(PolynomialFamily::jacobi(a, b), 1);
    CHECK(std::abs(j[0] - (b - a) / (a + b + 2.0)) < 1e-15);
  }

  // Legendre P_2 roots are +-1/sqrt(3), ascending.
  const auto leg = compute_roots(PolynomialFamily::jacobi(0.0, 0.0), 2);
  CHECK(leg.ordering == RootOrdering::AscendingJacobi);
  CHECK(std::abs(leg[0] + 1.0 / std::sqrt(3.0)) < 1e-15);
  CHECK(std::abs(leg[1] - 1.0 / std::sqrt(3.0)) < 1e-15);
  CHECK(std::abs(*gap_statistics(leg).min_gap - 2.0 / std::sqrt(3.0)) < 1e-15);
}

TEST_CASE("square-root coordinates") {
  CHECK(to_sqrt_coordinates(compute_roots(PolynomialFamily::laguerre(2.0), 1)).r[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(to_sqrt_coordinates(compute_roots(PolynomialFamily::laguerre(0.5), 1)).r[0] == doctest::Approx(1.0).epsilon(1e-15));

  for (double nu : rootgap::testing::nu_grid()) {
    const auto z = compute_roots(PolynomialFamily::laguerre(nu), 30);
    const auto r = to_sqrt_coordinates(z).r;
    for (std::size_t i = 0; i < r.size(); ++i) {
      CHECK(rel_diff(r[i] * r[i] / 2.0, z[i]) < 1e-14);
      if (i > 0) CHECK(r[i] < r[i - 1]);
    }
  }

  try {
    to_sqrt_coordinates(compute_roots(PolynomialFamily::hermite(), 3));
    FAIL("expected family mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FamilyMismatch);
    CHECK_FALSE(e.is_numerical());
  }
}

TEST_CASE("gap statistics per family") {
  const auto l = gap_statistics(compute_roots(PolynomialFamily::laguerre(3.0), 1));
  CHECK_FALSE(l.min_gap.has_value());
  CHECK(*l.boundary_low == doctest::Approx(3.0).epsilon(1e-15));
  CHECK_FALSE(l.boundary_high.has_value());

  const auto h = gap_statistics(compute_roots(PolynomialFamily::hermite(), 5));
  CHECK(h.min_gap.has_value());
  CHECK_FALSE(h.boundary_low.has_value());
  CHECK_FALSE(h.boundary_high.has_value());

  const auto z = compute_roots(PolynomialFamily::jacobi(1.0, -0.9), 6);
  const auto j = gap_statistics(z);
  CHECK(*j.boundary_low == 1.0 + z[0]);
  CHECK(*j.boundary_high == 1.0 - z[5]);
}

TEST_CASE("property: ordering, domain and symmetry over the grid") {
  for (const auto& f : rootgap::testing::grid_families()) {
    for (std::size_t n = 1; n <= 50; ++n) {
      const auto z = compute_roots(f, n);
      REQUIRE(z.size() == n);
      REQUIRE(z.ordering == ordering_for(f.kind()));
      for (std::size_t i = 0; i + 1 < n; ++i) REQUIRE((z.descending() ? z[i] > z[i + 1] : z[i] < z[i + 1]));
      for (std::size_t i = 0; i < n; ++i) {
        if (f.is(FamilyKind::Laguerre)) REQUIRE(z[i] > 0.0);
        if (f.is(FamilyKind::Jacobi)) REQUIRE((z[i] > -1.0 && z[i] < 1.0));
        if (f.is(FamilyKind::Hermite)) REQUIRE(std::abs(z[i] + z[n - 1 - i]) <= 1e-12 * std::abs(z[0]));
      }
    }
  }
}

TEST_CASE("property: strict interlacing of consecutive degrees") {
  for (const auto& f : rootgap::testing::grid_families()) {
    auto prev = compute_roots(f, 1);
    for (std::size_t n = 2; n <= 50; ++n) {
      const auto cur = compute_roots(f, n);
      std::vector<double> a(prev.roots);
      std::vector<double> b(cur.roots);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      for (std::size_t i = 0; i + 1 < n; ++i) {
        INFO(f.params_label(), " N=", n, " i=", i);
        REQUIRE(b[i] < a[i]);
        REQUIRE(a[i] < b[i + 1]);
      }
      prev = cur;
    }
  }
}

TEST_CASE("property: Newton refinement stays within half the eigenvalue spacing") {
  std::size_t skipped = 0;
  for (const auto& f : rootgap::testing::grid_families()) {
    for (std::size_t n = 2; n <= 50; ++n) {
      const auto eig = tridiag_eigenvalues(jacobi_matrix(f, n)).eigenvalues;
      auto z = compute_roots(f, n);
      std::vector<double> asc(z.roots);
      std::sort(asc.begin(), asc.end());
      for (std::size_t i = 0; i < n; ++i) REQUIRE(std::abs(asc[i] - eig[i]) <= 0.5 * nearest_spacing(eig, i));
      skipped += static_cast<std::size_t>(std::count(z.polish_skipped.begin(), z.polish_skipped.end(), true));
    }
  }
  CHECK(skipped == 0);
}

TEST_CASE("property: polished roots are zeros to working precision") {
  for (const auto& f : rootgap::testing::grid_families()) {
    for (std::size_t n = 2; n <= 50; ++n) {
      const auto z = compute_roots(f, n);
      std::vector<double> asc(z.roots);
      std::sort(asc.begin(), asc.end());
      for (std::size_t i = 0; i < n; ++i) {
        const auto ev = evaluate_with_derivative(f, n, asc[i]);
        INFO(f.params_label(), " N=", n, " i=", i);
        REQUIRE(std::abs(ev.value) <= 1e-12 * std::abs(ev.derivative) * nearest_spacing(asc, i));
      }
    }
  }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(compute_roots(PolynomialFamily::hermite(), 0), Error);
  try {
    compute_roots(PolynomialFamily::laguerre(1e300), 3);
    FAIL("expected an internal-consistency error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InternalConsistency);
    CHECK(e.is_numerical());
  }
}

}  // TEST_SUITE
