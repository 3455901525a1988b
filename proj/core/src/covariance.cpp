#include "rootgap/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rootgap/error.hpp"

namespace rootgap {

namespace {

void require_family(const RootVector& z, FamilyKind kind, const char* what) {
  if (!z.family.is(kind)) {
    throw Error(ErrorKind::FamilyMismatch, std::string(what) + " expects " + std::string(to_string(kind)) +
                                               " roots, got " + std::string(to_string(z.family.kind())));
  }
  if (z.size() == 0 || z.size() != z.n) throw Error(ErrorKind::EmptyProblem, "root vector is empty or inconsistent");
}

double diff(const RootVector& z, std::size_t i, std::size_t l) {
  const double d = z[i] - z[l];
  if (d == 0.0) throw Error(ErrorKind::SingularConfiguration, "coincident roots");
  return d;
}

double rel_diff(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

}  // namespace

InverseCovariance hermite_S(const RootVector& z) {
  require_family(z, FamilyKind::Hermite, "hermite_S");
  const std::size_t n = z.size();
  DenseSymmetric m(n);
  for (std::size_t i = 0; i < n; ++i) {
    double diag = 1.0;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == i) continue;
      const double d = diff(z, i, l);
      const double inv2 = 1.0 / (d * d);
      diag += inv2;
      if (l > i) m.set(i, l, -inv2);
    }
    m.set(i, i, diag);
  }
  return InverseCovariance{z, std::move(m), predicted_spectrum(z.family, n), LaguerreCoordinate::Z};
}

InverseCovariance laguerre_S(const RootVector& z, LaguerreCoordinate coordinate) {
  require_family(z, FamilyKind::Laguerre, "laguerre_S");
  const std::size_t n = z.size();
  const double nu = z.family.nu();
  for (double v : z.roots) {
    if (!(v > 0.0)) throw Error(ErrorKind::ParameterDomain, "Laguerre roots must be positive");
  }
  DenseSymmetric m(n);
  if (coordinate == LaguerreCoordinate::Z) {
    for (std::size_t i = 0; i < n; ++i) {
      double diag = 1.0 + nu / z[i];
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i) continue;
        const double d = diff(z, i, l);
        diag += 2.0 * (z[i] + z[l]) / (d * d);
        if (l > i) m.set(i, l, -4.0 * std::sqrt(z[i] * z[l]) / (d * d));
      }
      m.set(i, i, diag);
    }
  } else {
    const std::vector<double> r = to_sqrt_coordinates(z).r;
    for (std::size_t i = 0; i < n; ++i) {
      double diag = 1.0 + 2.0 * nu / (r[i] * r[i]);
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i) continue;
        const double dm = r[i] - r[l];
        const double dp = r[i] + r[l];
        if (dm == 0.0) throw Error(ErrorKind::SingularConfiguration, "coincident roots");
        diag += 2.0 * (1.0 / (dm * dm) + 1.0 / (dp * dp));
        if (l > i) m.set(i, l, 2.0 * (1.0 / (dp * dp) - 1.0 / (dm * dm)));
      }
      m.set(i, i, diag);
    }
  }
  return InverseCovariance{z, std::move(m), predicted_spectrum(z.family, n), coordinate};
}

InverseCovariance jacobi_S(const RootVector& z) {
  require_family(z, FamilyKind::Jacobi, "jacobi_S");
  const std::size_t n = z.size();
  const double ap1 = z.family.alpha() + 1.0;
  const double bp1 = z.family.beta() + 1.0;
  for (double v : z.roots) {
    if (!(v > -1.0 && v < 1.0)) throw Error(ErrorKind::SingularConfiguration, "Jacobi root on the boundary");
  }
  DenseSymmetric m(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double wj = (1.0 - z[j]) * (1.0 + z[j]);
    double diag = 2.0 * ap1 * (1.0 + z[j]) / (1.0 - z[j]) + 2.0 * bp1 * (1.0 - z[j]) / (1.0 + z[j]);
    for (std::size_t l = 0; l < n; ++l) {
      if (l == j) continue;
      const double d = diff(z, j, l);
      diag += 4.0 * wj / (d * d);
      if (l > j) m.set(j, l, -4.0 * std::sqrt(wj * ((1.0 - z[l]) * (1.0 + z[l]))) / (d * d));
    }
    m.set(j, j, diag);
  }
  return InverseCovariance{z, std::move(m), predicted_spectrum(z.family, n), LaguerreCoordinate::Z};
}

InverseCovariance detail::jacobi_S_ensemble(const RootVector& z, double a, double b) {
  require_family(z, FamilyKind::Jacobi, "jacobi_S_ensemble");
  const std::size_t n = z.size();
  DenseSymmetric m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (i == j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
          if (l == j) continue;
          const double d = diff(z, j, l);
          s += ((1.0 - z[j]) * (1.0 + z[j])) / (d * d);
        }
        m.set(j, j, 4.0 * s + 2.0 * (a + b) * (1.0 + z[j]) / (1.0 - z[j]) + 2.0 * b * (1.0 - z[j]) / (1.0 + z[j]));
      } else {
        const double d = diff(z, i, j);
        m.set(i, j, -4.0 * std::sqrt(((1.0 - z[j]) * (1.0 + z[j])) * ((1.0 - z[i]) * (1.0 + z[i]))) / (d * d));
      }
    }
  }
  return InverseCovariance{z, std::move(m), predicted_spectrum(z.family, n), LaguerreCoordinate::Z};
}

InverseCovariance inverse_covariance(const RootVector& z) {
  switch (z.family.kind()) {
    case FamilyKind::Hermite: return hermite_S(z);
    case FamilyKind::Laguerre: return laguerre_S(z, LaguerreCoordinate::Z);
    case FamilyKind::Jacobi: return jacobi_S(z);
  }
  throw Error(ErrorKind::Precondition, "unknown family");
}

std::vector<double> predicted_spectrum(const PolynomialFamily& family, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const double jj = static_cast<double>(j);
    switch (family.kind()) {
      case FamilyKind::Hermite: out[j - 1] = jj; break;
      case FamilyKind::Laguerre: out[j - 1] = 2.0 * jj; break;
      case FamilyKind::Jacobi:
        out[j - 1] = 2.0 * jj * (2.0 * static_cast<double>(n) + family.alpha() + family.beta() + 1.0 - jj);
        break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double max_eigenvalue(double alpha, double beta, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::EmptyProblem, "max_eigenvalue requires N >= 1");
  const double nn = static_cast<double>(n);
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j <= n; ++j) {
    const double jj = static_cast<double>(j);
    m = std::max(m, 2.0 * jj * (2.0 * nn + alpha + beta + 1.0 - jj));
  }
  return m;
}

std::vector<double> diag_of_square_closed_form(const RootVector& z) {
  const std::size_t n = z.size();
  std::vector<double> out(n);
  const PolynomialFamily& f = z.family;
  for (std::size_t i = 0; i < n; ++i) {
    double first = 0.0;
    double second = 0.0;
    switch (f.kind()) {
      case FamilyKind::Hermite:
        for (std::size_t l = 0; l < n; ++l) {
          if (l == i) continue;
          const double d2 = diff(z, i, l) * diff(z, i, l);
          first += 1.0 / d2;
          second += 1.0 / (d2 * d2);
        }
        break;
      case FamilyKind::Laguerre:
        first = f.nu() / z[i];
        for (std::size_t l = 0; l < n; ++l) {
          if (l == i) continue;
          const double d2 = diff(z, i, l) * diff(z, i, l);
          first += 2.0 * (z[i] + z[l]) / d2;
          second += 16.0 * z[i] * z[l] / (d2 * d2);
        }
        break;
      case FamilyKind::Jacobi: {
        const double wi = (1.0 - z[i]) * (1.0 + z[i]);
        first = 2.0 * (f.alpha() + 1.0) * (1.0 + z[i]) / (1.0 - z[i]) +
                2.0 * (f.beta() + 1.0) * (1.0 - z[i]) / (1.0 + z[i]);
        for (std::size_t l = 0; l < n; ++l) {
          if (l == i) continue;
          const double d2 = diff(z, i, l) * diff(z, i, l);
          first += 4.0 * wi / d2;
          second += 16.0 * ((1.0 - z[l]) * (1.0 + z[l])) * wi / (d2 * d2);
        }
        break;
      }
    }
    out[i] = first * first + second;
  }
  return out;
}

DiagOfSquare detail::diag_of_square_unchecked(const InverseCovariance& s) {
  const bool shift = !s.family().is(FamilyKind::Jacobi);
  const DenseSymmetric base = shift ? s.matrix.shifted(-1.0) : s.matrix;
  const DenseSymmetric sq = square(base);
  DiagOfSquare out;
  out.values.resize(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) out.values[i] = sq(i, i);
  out.closed_form = diag_of_square_closed_form(s.roots);
  for (std::size_t i = 0; i < s.n(); ++i) {
    out.max_rel_discrepancy = std::max(out.max_rel_discrepancy, rel_diff(out.values[i], out.closed_form[i]));
  }
  return out;
}

DiagOfSquare diag_of_square(const InverseCovariance& s) {
  DiagOfSquare out = detail::diag_of_square_unchecked(s);
  if (out.max_rel_discrepancy > 1e-10) {
    throw Error(ErrorKind::InternalConsistency, "diagonal of the squared matrix disagrees with its closed form");
  }
  return out;
}

double TraceIdentity::rel_residual() const noexcept {
  const double scale = std::abs(rhs);
  return scale == 0.0 ? std::abs(lhs - rhs) : std::abs(lhs - rhs) / scale;
}

std::vector<TraceIdentity> trace_identities(const InverseCovariance& s) {
  const RootVector& z = s.roots;
  const std::size_t n = z.size();
  const double nn = static_cast<double>(n);
  std::vector<TraceIdentity> out;
  auto sum_closed = [&] {
    double t = 0.0;
    for (double v : diag_of_square_closed_form(z)) t += v;
    return t;
  };
  switch (z.family.kind()) {
    case FamilyKind::Hermite: {
      double pair = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
          if (l != i) pair += 1.0 / (diff(z, i, l) * diff(z, i, l));
        }
      }
      out.push_back({"hermite.trace", pair, nn * (nn - 1.0) / 2.0});
      out.push_back({"hermite.trace_sq", sum_closed(), nn * (nn - 1.0) * (2.0 * nn - 1.0) / 6.0});
      break;
    }
    case FamilyKind::Laguerre: {
      double t = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        t += z.family.nu() / z[i];
        for (std::size_t l = 0; l < n; ++l) {
          if (l != i) t += 2.0 * (z[i] + z[l]) / (diff(z, i, l) * diff(z, i, l));
        }
      }
      out.push_back({"laguerre.trace", t, nn * nn});
      out.push_back({"laguerre.trace_sq", sum_closed(), nn * (2.0 * nn - 1.0) * (2.0 * nn + 1.0) / 3.0});
      break;
    }
    case FamilyKind::Jacobi: {
      double lam = 0.0;
      for (double v : s.predicted) lam += v;
      out.push_back({"jacobi.trace", s.matrix.trace(), lam});
      break;
    }
  }
  return out;
}

double spectral_tolerance(const PolynomialFamily& family, std::size_t n) {
  if (n <= 20) return 1e-8;
  if (n <= 40) return 1e-6;
  const bool extreme = (family.is(FamilyKind::Laguerre) && family.nu() > 50.0) ||
                       (family.is(FamilyKind::Jacobi) && (family.alpha() <= -0.9 || family.beta() <= -0.9));
  return extreme ? 1e-4 : 1e-6;
}

SpectralMatch spectral_match(const InverseCovariance& s) {
  SpectralMatch out;
  out.computed = dense_eigenvalues(s.matrix).eigenvalues;
  out.tolerance = spectral_tolerance(s.family(), s.n());
  for (std::size_t i = 0; i < out.computed.size(); ++i) {
    const double p = s.predicted[i];
    out.max_rel_error = std::max(out.max_rel_error, std::abs(out.computed[i] - p) / std::abs(p));
  }
  return out;
}

double max_entrywise_rel_difference(const DenseSymmetric& x, const DenseSymmetric& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::Precondition, "matrix dimensions differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) worst = std::max(worst, rel_diff(x(i, j), y(i, j)));
  }
  return worst;
}

}  // namespace rootgap
