#include "rootgap/family.hpp"

#include <algorithm>
#include <cmath>

#include "rootgap/error.hpp"
#include "rootgap/format.hpp"

namespace rootgap {

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::Hermite: return "hermite";
    case FamilyKind::Laguerre: return "laguerre";
    case FamilyKind::Jacobi: return "jacobi";
  }
  return "unknown";
}

PolynomialFamily PolynomialFamily::hermite() noexcept {
  return PolynomialFamily(FamilyKind::Hermite, 0.0, 0.0, 0.0);
}

PolynomialFamily PolynomialFamily::laguerre(double nu) {
  if (!std::isfinite(nu) || !(nu > 0.0)) {
    throw Error(ErrorKind::ParameterDomain, "Laguerre family requires nu > 0, got " + format_double(nu));
  }
  return PolynomialFamily(FamilyKind::Laguerre, nu, 0.0, 0.0);
}

PolynomialFamily PolynomialFamily::jacobi(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !(alpha > -1.0) || !(beta > -1.0)) {
    throw Error(ErrorKind::ParameterDomain, "Jacobi family requires alpha, beta > -1, got alpha=" +
                                                format_double(alpha) + " beta=" + format_double(beta));
  }
  return PolynomialFamily(FamilyKind::Jacobi, 0.0, alpha, beta);
}

std::string PolynomialFamily::params_label() const {
  switch (kind_) {
    case FamilyKind::Hermite: return "-";
    case FamilyKind::Laguerre: return "nu=" + format_double(nu_);
    case FamilyKind::Jacobi: return "alpha=" + format_double(alpha_) + ";beta=" + format_double(beta_);
  }
  return "";
}

SymTridiagonal::SymTridiagonal(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty()) throw Error(ErrorKind::EmptyProblem, "tridiagonal matrix of size 0");
  if (offdiag_.size() + 1 != diag_.size()) {
    throw Error(ErrorKind::Precondition, "tridiagonal off-diagonal must have length n-1");
  }
  for (double e : offdiag_) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw Error(ErrorKind::Precondition, "tridiagonal off-diagonal entries must be positive and finite");
    }
  }
  for (double d : diag_) {
    if (!std::isfinite(d)) throw Error(ErrorKind::Precondition, "tridiagonal diagonal entry is not finite");
  }
}

namespace {

void require_degree(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::EmptyProblem, "polynomial degree must be at least 1");
}

// Monic recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}.
double jacobi_monic_a(double alpha, double beta, std::size_t k) {
  const double s = alpha + beta;
  if (k == 0) return (beta - alpha) / (s + 2.0);
  const double kk = static_cast<double>(k);
  return (beta * beta - alpha * alpha) / ((2.0 * kk + s) * (2.0 * kk + s + 2.0));
}

double jacobi_monic_b(double alpha, double beta, std::size_t k) {
  const double s = alpha + beta;
  // k = 1 in cancelled form: the generic expression is 0/0 at alpha + beta = -1.
  if (k == 1) {
    return 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
  }
  const double kk = static_cast<double>(k);
  const double t = 2.0 * kk + s;
  return 4.0 * kk * (kk + alpha) * (kk + beta) * (kk + s) / (t * t * (t + 1.0) * (t - 1.0));
}

// Szego-normalized recurrence P_{k+1} = (A_k x + B_k) P_k - C_k P_{k-1}.
struct Step {
  double a;
  double b;
  double c;
};

Step recurrence_step(const PolynomialFamily& f, std::size_t k) {
  const double kk = static_cast<double>(k);
  switch (f.kind()) {
    case FamilyKind::Hermite:
      return {2.0, 0.0, 2.0 * kk};
    case FamilyKind::Laguerre: {
      const double a = f.nu() - 1.0;
      return {-1.0 / (kk + 1.0), (2.0 * kk + 1.0 + a) / (kk + 1.0), (kk + a) / (kk + 1.0)};
    }
    case FamilyKind::Jacobi: {
      const double al = f.alpha();
      const double be = f.beta();
      const double s = al + be;
      if (k == 0) return {(s + 2.0) / 2.0, (al - be) / 2.0, 0.0};
      const double t = 2.0 * kk + s;
      const double d = 2.0 * (kk + 1.0) * (kk + s + 1.0) * t;
      return {(t + 1.0) * (t + 2.0) * t / d, (t + 1.0) * (al * al - be * be) / d,
              2.0 * (kk + al) * (kk + be) * (t + 2.0) / d};
    }
  }
  return {0.0, 0.0, 0.0};
}

constexpr int kRescaleBits = 600;
const double kRescaleThreshold = std::ldexp(1.0, kRescaleBits);

}  // namespace

SymTridiagonal jacobi_matrix(const PolynomialFamily& family, std::size_t n) {
  require_degree(n);
  std::vector<double> diag(n);
  std::vector<double> off(n - 1);
  switch (family.kind()) {
    case FamilyKind::Hermite:
      for (std::size_t k = 1; k < n; ++k) off[k - 1] = std::sqrt(static_cast<double>(k) / 2.0);
      break;
    case FamilyKind::Laguerre: {
      const double a = family.nu() - 1.0;
      for (std::size_t k = 0; k < n; ++k) diag[k] = 2.0 * static_cast<double>(k) + a + 1.0;
      for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        off[k - 1] = std::sqrt(kk * (kk + a));
      }
      break;
    }
    case FamilyKind::Jacobi:
      for (std::size_t k = 0; k < n; ++k) diag[k] = jacobi_monic_a(family.alpha(), family.beta(), k);
      for (std::size_t k = 1; k < n; ++k) off[k - 1] = std::sqrt(jacobi_monic_b(family.alpha(), family.beta(), k));
      break;
  }
  return SymTridiagonal(std::move(diag), std::move(off));
}

Evaluation evaluate_with_derivative(const PolynomialFamily& family, std::size_t n, double x) {
  require_degree(n);
  if (!std::isfinite(x)) throw MagnitudeError(0, "evaluation point is not finite");
  Evaluation out;
  double p_prev = 0.0;
  double p = 1.0;
  double d_prev = 0.0;
  double d = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Step st = recurrence_step(family, k);
    const double factor = st.a * x + st.b;
    const double p_next = factor * p - st.c * p_prev;
    const double d_next = factor * d + st.a * p - st.c * d_prev;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    const double mag = std::max({std::abs(p), std::abs(p_prev), std::abs(d), std::abs(d_prev)});
    if (!std::isfinite(mag)) throw MagnitudeError(out.exponent, "polynomial recurrence overflowed");
    if (mag > kRescaleThreshold) {
      p = std::ldexp(p, -kRescaleBits);
      p_prev = std::ldexp(p_prev, -kRescaleBits);
      d = std::ldexp(d, -kRescaleBits);
      d_prev = std::ldexp(d_prev, -kRescaleBits);
      out.exponent += kRescaleBits;
    }
  }
  out.value = p;
  out.derivative = d;
  return out;
}

namespace {

double unscale(double scaled, long exponent) {
  const double v = std::ldexp(scaled, static_cast<int>(exponent));
  if (!std::isfinite(v)) throw MagnitudeError(exponent, "unscaled polynomial value overflows");
  return v;
}

}  // namespace

double Evaluation::true_value() const { return unscale(value, exponent); }
double Evaluation::true_derivative() const { return unscale(derivative, exponent); }

}  // namespace rootgap
