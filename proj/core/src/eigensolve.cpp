#include "rootgap/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "rootgap/error.hpp"

namespace rootgap {

DenseSymmetric::DenseSymmetric(std::size_t n) : n_(n), a_(n * n, 0.0) {
  if (n == 0) throw Error(ErrorKind::EmptyProblem, "dense matrix of size 0");
}

DenseSymmetric DenseSymmetric::identity(std::size_t n) {
  DenseSymmetric m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

DenseSymmetric DenseSymmetric::diagonal(std::span<const double> values) {
  DenseSymmetric m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
  return m;
}

DenseSymmetric DenseSymmetric::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

DenseSymmetric DenseSymmetric::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  DenseSymmetric m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorKind::Precondition, "matrix rows must form a square array");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) throw Error(ErrorKind::Precondition, "matrix is not symmetric");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

double DenseSymmetric::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double DenseSymmetric::max_abs() const noexcept {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

DenseSymmetric DenseSymmetric::shifted(double shift) const {
  DenseSymmetric out = *this;
  for (std::size_t i = 0; i < n_; ++i) out.set(i, i, (*this)(i, i) + shift);
  return out;
}

Spectrum tridiag_eigenvalues(const SymTridiagonal& t) {
  const std::size_t n = t.size();
  std::vector<double> d = t.diag();
  // e[i] couples d[i] and d[i+1]; e[n-1] is a zero sentinel.
  std::vector<double> e(n, 0.0);
  std::copy(t.offdiag().begin(), t.offdiag().end(), e.begin());

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const std::size_t max_iter = 50 * n;
  std::size_t iter = 0;
  double residual = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) < std::numeric_limits<double>::min()) break;
      }
      if (m + 1 < n) residual = std::max(residual, std::abs(e[m]));
      if (m == l) break;
      if (++iter > max_iter) throw ConvergenceError(l, "implicit QL did not converge");

      // Wilkinson shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  std::sort(d.begin(), d.end());
  return Spectrum{std::move(d), residual};
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) s += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(s);
}

}  // namespace

Spectrum dense_eigenvalues(const DenseSymmetric& m) {
  const std::size_t n = m.size();
  std::vector<double> a(n * n);
  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j);
      frob += m(i, j) * m(i, j);
    }
  }
  frob = std::sqrt(frob);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double target = eps * frob;
  const std::size_t max_sweeps = 50 * n;
  std::size_t sweep = 0;
  double off = off_diagonal_norm(a, n);
  while (off > target) {
    if (++sweep > max_sweeps) {
      std::size_t worst = 0;
      double worst_val = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (std::abs(at(i, j)) > worst_val) {
            worst_val = std::abs(at(i, j));
            worst = i;
          }
        }
      }
      throw ConvergenceError(worst, "cyclic Jacobi did not converge");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          const double nkp = c * akp - s * akq;
          const double nkq = s * akp + c * akq;
          at(k, p) = nkp;
          at(p, k) = nkp;
          at(k, q) = nkq;
          at(q, k) = nkq;
        }
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
    off = off_diagonal_norm(a, n);
  }

  Spectrum out;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = at(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  out.residual = off;
  return out;
}

namespace {

// Product of two commuting symmetric matrices (here: powers of one matrix),
// which is itself symmetric; only the upper triangle is computed.
DenseSymmetric multiply_commuting(const DenseSymmetric& x, const DenseSymmetric& y) {
  const std::size_t n = x.size();
  DenseSymmetric out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = x.row(i);
    for (std::size_t j = i; j < n; ++j) {
      const auto yj = y.row(j);
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += xi[k] * yj[k];
      out.set(i, j, s);
    }
  }
  return out;
}

void require_finite(const DenseSymmetric& m, unsigned k) {
  if (!std::isfinite(m.max_abs())) {
    throw MagnitudeError(static_cast<long>(std::numeric_limits<double>::max_exponent),
                         "matrix power m^" + std::to_string(k) + " overflows");
  }
}

}  // namespace

DenseSymmetric square(const DenseSymmetric& m) { return multiply_commuting(m, m); }

double trace_power(const DenseSymmetric& m, unsigned k) {
  if (k == 0) throw Error(ErrorKind::Precondition, "trace_power requires k >= 1");
  DenseSymmetric base = m;
  std::optional<DenseSymmetric> acc;
  unsigned e = k;
  unsigned done = 1;
  for (;;) {
    if (e & 1u) {
      acc = acc ? multiply_commuting(*acc, base) : base;
      require_finite(*acc, k);
    }
    e >>= 1u;
    if (e == 0) break;
    base = multiply_commuting(base, base);
    done *= 2;
    require_finite(base, done);
  }
  const double tr = acc->trace();
  if (!std::isfinite(tr)) throw MagnitudeError(0, "trace of m^" + std::to_string(k) + " overflows");
  return tr;
}

}  // namespace rootgap
