#pragma once

// Shared helpers for the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rootgap/eigensolve.hpp"
#include "rootgap/family.hpp"

namespace rootgap::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'2a6b'91c3'0f47ULL;

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline const std::vector<double>& nu_grid() {
  static const std::vector<double> g{0.1, 0.5, 1.0, 2.0, 10.0, 50.0};
  return g;
}

inline const std::vector<std::pair<double, double>>& jacobi_grid() {
  static const std::vector<std::pair<double, double>> g{{-0.5, -0.5}, {0.0, 0.0}, {1.0, -0.9}, {2.0, 3.0}, {10.0, 10.0}};
  return g;
}

/// Every family instance of the standard parameter grid.
inline std::vector<PolynomialFamily> grid_families() {
  std::vector<PolynomialFamily> out{PolynomialFamily::hermite()};
  for (double nu : nu_grid()) out.push_back(PolynomialFamily::laguerre(nu));
  for (auto [a, b] : jacobi_grid()) out.push_back(PolynomialFamily::jacobi(a, b));
  return out;
}

/// Random family with nu and alpha + 1, beta + 1 log-uniform in
/// [10^min_log10, 100].
inline PolynomialFamily random_family(std::mt19937_64& rng, double min_log10 = -6.0) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_real_distribution<double> expo(min_log10, 2.0);
  auto param = [&] { return std::pow(10.0, expo(rng)); };
  switch (kind(rng)) {
    case 0: return PolynomialFamily::hermite();
    case 1: return PolynomialFamily::laguerre(param());
    default: return PolynomialFamily::jacobi(param() - 1.0, param() - 1.0);
  }
}

inline DenseSymmetric random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  DenseSymmetric m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m.set(i, j, g(rng));
  }
  return m;
}

/// P B P with P = I - (1/n) 1 1^T, so that (1, ..., 1) is in the kernel.
inline DenseSymmetric project_out_ones(const DenseSymmetric& b) {
  const std::size_t n = b.size();
  const double dn = static_cast<double>(n);
  std::vector<double> row_mean(n, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row_mean[i] += b(i, j) / dn;
    total += row_mean[i] / dn;
  }
  DenseSymmetric out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out.set(i, j, b(i, j) - row_mean[i] - row_mean[j] + total);
  }
  return out;
}

/// Slack of tr(B^{2^r}) >= c * sum_i b_ii^{2^r}, relative to the larger of
/// the two sides in absolute value (r = 0 is an equality that may sit at 0).
inline double trace_inequality_slack(const DenseSymmetric& b, unsigned r, double c) {
  const unsigned k = 1u << r;
  double rhs = 0.0;
  double rhs_abs = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double p = std::pow(b(i, i), static_cast<double>(k));
    rhs += p;
    rhs_abs += std::abs(p);
  }
  const double lhs = trace_power(b, k);
  const double scale = std::max({std::abs(lhs), c * rhs_abs, 1e-300});
  return (lhs - c * rhs) / scale;
}

}  // namespace rootgap::testing
