#include <doctest.h>

#include <cmath>
#include <random>

#include "rootgap/covariance.hpp"
#include "rootgap/error.hpp"
#include "support.hpp"

using namespace rootgap;
using rootgap::testing::rel_diff;

namespace {

// Entry-by-entry oracles written straight from the matrix definitions.
double hermite_entry(const RootVector& z, std::size_t i, std::size_t j) {
  if (i != j) return -1.0 / ((z[i] - z[j]) * (z[i] - z[j]));
  double s = 1.0;
  for (std::size_t l = 0; l < z.size(); ++l) {
    if (l != i) s += 1.0 / ((z[i] - z[l]) * (z[i] - z[l]));
  }
  return s;
}

double laguerre_entry(const RootVector& z, std::size_t i, std::size_t j) {
  if (i != j) return -4.0 * std::sqrt(z[i] * z[j]) / ((z[i] - z[j]) * (z[i] - z[j]));
  double s = 1.0 + z.family.nu() / z[i];
  for (std::size_t l = 0; l < z.size(); ++l) {
    if (l != i) s += 2.0 * (z[i] + z[l]) / ((z[i] - z[l]) * (z[i] - z[l]));
  }
  return s;
}

double jacobi_entry(const RootVector& z, std::size_t i, std::size_t j) {
  // Ensemble parameters: a + b = alpha + 1, b = beta + 1.
  const double apb = z.family.alpha() + 1.0;
  const double b = z.family.beta() + 1.0;
  // 1 - z^2 as a product: roots can sit within 1e-8 of +-1.
  auto w = [&](std::size_t k) { return (1 - z[k]) * (1 + z[k]); };
  if (i != j) return -4.0 * std::sqrt(w(i) * w(j)) / ((z[i] - z[j]) * (z[i] - z[j]));
  double s = 2.0 * apb * (1 + z[j]) / (1 - z[j]) + 2.0 * b * (1 - z[j]) / (1 + z[j]);
  for (std::size_t l = 0; l < z.size(); ++l) {
    if (l != j) s += 4.0 * w(j) / ((z[j] - z[l]) * (z[j] - z[l]));
  }
  return s;
}

double oracle_entry(const RootVector& z, std::size_t i, std::size_t j) {
  switch (z.family.kind()) {
    case FamilyKind::Hermite: return hermite_entry(z, i, j);
    case FamilyKind::Laguerre: return laguerre_entry(z, i, j);
    case FamilyKind::Jacobi: return jacobi_entry(z, i, j);
  }
  return 0.0;
}

}  // namespace

TEST_SUITE("covariance") {

TEST_CASE("Hermite small cases") {
  const auto s2 = hermite_S(compute_roots(PolynomialFamily::hermite(), 2));
  CHECK(s2.matrix(0, 0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(s2.matrix(1, 1) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(s2.matrix(0, 1) == doctest::Approx(-0.5).epsilon(1e-15));
  const auto ev2 = dense_eigenvalues(s2.matrix).eigenvalues;
  CHECK(ev2[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ev2[1] == doctest::Approx(2.0).epsilon(1e-14));

  const auto s1 = hermite_S(compute_roots(PolynomialFamily::hermite(), 1));
  CHECK(s1.matrix == DenseSymmetric::identity(1));
  CHECK(s1.predicted == std::vector<double>{1.0});

  const auto ev3 = spectral_match(hermite_S(compute_roots(PolynomialFamily::hermite(), 3)));
  CHECK(ev3.passed());
  CHECK(ev3.max_rel_error <= 1e-8);
}

TEST_CASE("Laguerre small cases") {
  for (double nu : {0.1, 1.0, 7.0}) {
    const auto s = laguerre_S(compute_roots(PolynomialFamily::laguerre(nu), 1));
    CHECK(s.matrix(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
  }
  const auto z = compute_roots(PolynomialFamily::laguerre(1.0), 2);
  CHECK(max_entrywise_rel_difference(laguerre_S(z).matrix, laguerre_S(z, LaguerreCoordinate::SqrtR).matrix) <= 1e-13);
  const auto m3 = spectral_match(laguerre_S(compute_roots(PolynomialFamily::laguerre(2.0), 3)));
  CHECK(m3.passed());
  REQUIRE(m3.computed.size() == 3);
  CHECK(rel_diff(m3.computed[2], 6.0) < 1e-12);
  CHECK_THROWS_AS(laguerre_S(compute_roots(PolynomialFamily::hermite(), 3)), Error);
}

TEST_CASE("Jacobi small cases") {
  std::mt19937_64 rng(rootgap::testing::kSeed);
  std::uniform_real_distribution<double> p(-0.99, 20.0);
  for (int t = 0; t < 50; ++t) {
    const double a = p(rng);
    const double b = p(rng);
    const auto s = jacobi_S(compute_roots(PolynomialFamily::jacobi(a, b), 1));
    CHECK(rel_diff(s.matrix(0, 0), 2.0 * (a + b + 2.0)) < 1e-13);
  }
  const auto m = spectral_match(jacobi_S(compute_roots(PolynomialFamily::jacobi(0.0, 0.0), 2)));
  CHECK(rel_diff(m.computed[0], 8.0) < 1e-13);
  CHECK(rel_diff(m.computed[1], 12.0) < 1e-13);
}

TEST_CASE("predicted spectra and spectral radius") {
  CHECK(predicted_spectrum(PolynomialFamily::hermite(), 4) == std::vector<double>{1, 2, 3, 4});
  CHECK(predicted_spectrum(PolynomialFamily::laguerre(7.0), 3) == std::vector<double>{2, 4, 6});
  CHECK(predicted_spectrum(PolynomialFamily::jacobi(-0.5, -0.5), 2) == std::vector<double>{6, 8});

  CHECK(max_eigenvalue(0.0, 0.0, 3) == 24.0);
  CHECK(max_eigenvalue(1.5, 2.5, 1) == doctest::Approx(2.0 * (1.5 + 2.5 + 2.0)));
  // alpha + beta + 1 < 0: the largest eigenvalue is not at j = N.
  double scan = 0.0;
  for (int j = 1; j <= 5; ++j) scan = std::max(scan, 2.0 * j * (10.0 - 1.8 + 1.0 - j));
  CHECK(max_eigenvalue(-0.9, -0.9, 5) == doctest::Approx(scan).epsilon(1e-15));
}

TEST_CASE("diagonal of the square") {
  const auto h = diag_of_square(hermite_S(compute_roots(PolynomialFamily::hermite(), 2)));
  for (double v : h.values) CHECK(v == doctest::Approx(0.5).epsilon(1e-14));
  for (double v : h.closed_form) CHECK(v == doctest::Approx(0.5).epsilon(1e-14));

  const auto l = diag_of_square(laguerre_S(compute_roots(PolynomialFamily::laguerre(4.0), 1)));
  CHECK(l.values[0] == doctest::Approx(1.0).epsilon(1e-14));

  for (const auto& f : rootgap::testing::grid_families()) {
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto d = diag_of_square(inverse_covariance(compute_roots(f, n)));
      REQUIRE(d.max_rel_discrepancy <= 1e-10);
    }
  }
}

TEST_CASE("trace identities") {
  const auto h = trace_identities(hermite_S(compute_roots(PolynomialFamily::hermite(), 2)));
  REQUIRE(h.size() == 2);
  CHECK(h[0].id == "hermite.trace");
  CHECK(h[0].rhs == 1.0);
  CHECK(h[1].rhs == 1.0);

  const auto l = trace_identities(laguerre_S(compute_roots(PolynomialFamily::laguerre(1.0), 10)));
  REQUIRE(l.size() == 2);
  CHECK(l[0].id == "laguerre.trace");
  // tr(S - I) = 2 + 4 + ... + 2N - N.
  CHECK(l[0].rhs == 100.0);
  CHECK(l[0].rel_residual() <= 1e-10);
  CHECK(l[1].rhs == 10.0 * 19.0 * 21.0 / 3.0);
  CHECK(l[1].rel_residual() <= 1e-10);

  for (const auto& f : rootgap::testing::grid_families()) {
    for (std::size_t n = 1; n <= 40; ++n) {
      for (const auto& id : trace_identities(inverse_covariance(compute_roots(f, n)))) {
        INFO(id.id, " ", f.params_label(), " N=", n);
        REQUIRE(id.rel_residual() <= 1e-10);
      }
    }
  }
}

TEST_CASE("property: matrices match the entry oracles") {
  std::mt19937_64 rng(rootgap::testing::kSeed + 5);
  std::uniform_int_distribution<std::size_t> size(1, 25);
  for (int t = 0; t < 150; ++t) {
    const auto f = rootgap::testing::random_family(rng);
    const auto z = compute_roots(f, size(rng));
    const auto s = inverse_covariance(z);
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (std::size_t j = 0; j < z.size(); ++j) {
        INFO(f.params_label(), " N=", z.size(), " (", i, ",", j, ")");
        REQUIRE(rel_diff(s.matrix(i, j), oracle_entry(z, i, j)) <= 1e-13);
      }
    }
  }
}

TEST_CASE("property: alternative parameterizations agree") {
  for (const auto& f : rootgap::testing::grid_families()) {
    for (std::size_t n = 1; n <= 40; ++n) {
      const auto z = compute_roots(f, n);
      if (f.is(FamilyKind::Laguerre)) {
        REQUIRE(max_entrywise_rel_difference(laguerre_S(z).matrix, laguerre_S(z, LaguerreCoordinate::SqrtR).matrix) <=
                1e-13);
      }
      if (f.is(FamilyKind::Jacobi)) {
        const double b = f.beta() + 1.0;
        const double a = f.alpha() - f.beta();
        REQUIRE(max_entrywise_rel_difference(jacobi_S(z).matrix, detail::jacobi_S_ensemble(z, a, b).matrix) <= 1e-13);
      }
    }
  }
}

TEST_CASE("property: spectra match the closed forms on random parameters") {
  std::mt19937_64 rng(rootgap::testing::kSeed + 6);
  std::uniform_int_distribution<std::size_t> size(1, 20);
  for (int t = 0; t < 150; ++t) {
    // Closer to the parameter boundary the smallest root distance 1 + z_1
    // drops below what a double resolves (see the bounds property test).
    const auto f = rootgap::testing::random_family(rng, -3.0);
    const std::size_t n = size(rng);
    const auto m = spectral_match(inverse_covariance(compute_roots(f, n)));
    INFO(f.params_label(), " N=", n);
    REQUIRE(m.max_rel_error <= 1e-8);
  }
}

TEST_CASE("spectral tolerances") {
  CHECK(spectral_tolerance(PolynomialFamily::hermite(), 20) == 1e-8);
  CHECK(spectral_tolerance(PolynomialFamily::hermite(), 40) == 1e-6);
  CHECK(spectral_tolerance(PolynomialFamily::laguerre(60.0), 45) == 1e-4);
  CHECK(spectral_tolerance(PolynomialFamily::jacobi(-0.95, 0.0), 45) == 1e-4);
  CHECK(spectral_tolerance(PolynomialFamily::jacobi(0.0, 0.0), 45) == 1e-6);
}

}  // TEST_SUITE
