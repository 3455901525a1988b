#include "rootgap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "rootgap/covariance.hpp"
#include "rootgap/error.hpp"

namespace rootgap {

std::string_view to_string(BoundKind k) noexcept {
  return k == BoundKind::Derived ? "derived" : "comparator";
}

std::string_view to_string(BoundStatus s) noexcept {
  switch (s) {
    case BoundStatus::Evaluated: return "evaluated";
    case BoundStatus::NotApplicable: return "not-applicable";
    case BoundStatus::Vacuous: return "vacuous";
  }
  return "unknown";
}

std::string_view to_string(BoundDirection d) noexcept { return d == BoundDirection::Lower ? "lower" : "upper"; }

namespace formula {

namespace {
double dn(std::size_t n) { return static_cast<double>(n); }
}  // namespace

double hermite_diag_sq(std::size_t n) { return std::pow(dn(n) - 1.0, 3) / dn(n); }
double hermite_inv4_sum(std::size_t n) { return std::pow(dn(n) - 1.0, 3) / (2.0 * dn(n)); }
double hermite_inv4_sum_weak(std::size_t n) { return (dn(n) - 1.0) * (dn(n) - 1.0) / 2.0; }
double hermite_inv2_sum(std::size_t n) { return std::pow(dn(n) - 1.0, 1.5) / std::sqrt(dn(n)); }
double hermite_inv2_sum_weak(std::size_t n) { return dn(n) - 1.0; }
double hermite_gap(std::size_t n) { return std::pow(2.0 * dn(n), 0.25) / std::pow(dn(n) - 1.0, 0.75); }
double hermite_gap_weak(std::size_t n) { return std::pow(2.0, 0.25) / std::sqrt(dn(n) - 1.0); }
double hermite_gap_k2(std::size_t n) { return 2.0 / std::sqrt(dn(n)); }

double laguerre_diag_sq(std::size_t n) { return (2.0 * dn(n) - 1.0) * (2.0 * dn(n) - 1.0); }
double laguerre_smallest_root(double nu, std::size_t n) { return nu / (2.0 * dn(n) - 1.0); }

double laguerre_gap(double nu, std::size_t n) {
  return std::sqrt(2.0 * (1.0 + std::sqrt(1.0 + 8.0 * nu * nu))) / (2.0 * dn(n) - 1.0);
}

double laguerre_gap_weak(double nu, std::size_t n) {
  return 2.0 * std::pow(2.0, 0.25) * std::sqrt(nu) / (2.0 * dn(n) - 1.0);
}

double laguerre_gap_szego(double nu, std::size_t n) {
  const double m = 2.0 * dn(n) - 1.0;
  const double q = (nu * nu - 1.0) / (dn(n) + nu / 2.0);
  return std::numbers::sqrt2 / m * std::sqrt(2.0 + std::numbers::sqrt2 * std::sqrt(2.0 + m * m * q * q));
}

double laguerre_gap_szego_weak(double nu, std::size_t n) {
  return std::pow(2.0, 0.75) * std::sqrt(nu * nu - 1.0) / std::sqrt((2.0 * dn(n) - 1.0) * (dn(n) + nu / 2.0));
}

double laguerre_sqrt_gap(std::size_t n) { return 1.0 / std::sqrt(2.0 * dn(n) - 1.0); }

double laguerre_smallest_root_szego(double nu, std::size_t n) { return (nu * nu - 1.0) / (4.0 * (dn(n) + nu / 2.0)); }

double laguerre_gap_cd(double nu, std::size_t n) { return (nu - 1.0) / std::sqrt((dn(n) + nu - 1.0) * dn(n)); }

double laguerre_gap_k2(double nu, std::size_t n) {
  return 2.0 * std::numbers::sqrt2 * nu / std::sqrt((dn(n) + nu) * dn(n));
}

double laguerre_gap_jt(double nu, std::size_t n) {
  return std::numbers::pi * std::numbers::sqrt2 / std::sqrt(2.0 * nu * dn(n) + nu + 2.0 * dn(n) * dn(n));
}

double jacobi_diag_sq(double m) { return m * m; }

namespace {
double boundary(double p, double alpha, double beta, double m) {
  const double disc = std::max(0.0, m * m - 16.0 * (alpha + 1.0) * (beta + 1.0));
  return 8.0 * p / (m + 4.0 * p + std::sqrt(disc));
}
}  // namespace

double jacobi_right_boundary(double alpha, double beta, double m) { return boundary(alpha + 1.0, alpha, beta, m); }
double jacobi_right_boundary_weak(double alpha, double m) { return 4.0 * (alpha + 1.0) / (m + 2.0 * (alpha + 1.0)); }
double jacobi_left_boundary(double alpha, double beta, double m) { return boundary(beta + 1.0, alpha, beta, m); }
double jacobi_left_boundary_weak(double beta, double m) { return 4.0 * (beta + 1.0) / (m + 2.0 * (beta + 1.0)); }

double jacobi_one_minus_sq(double alpha, double beta, double m) {
  return 2.0 * std::min(alpha + 1.0, beta + 1.0) / m;
}

double jacobi_one_minus_sq_symmetric(double alpha, double m) { return 8.0 * (alpha + 1.0) / (m + 4.0 * (alpha + 1.0)); }

double jacobi_gap(double alpha, double beta, double m) {
  return std::pow(2.0, 1.75) / m * std::sqrt(std::min(alpha + 1.0, beta + 1.0));
}

double jacobi_gap_symmetric(double alpha, double m) {
  return std::pow(2.0, 2.75) * std::sqrt(alpha + 1.0) / std::sqrt(m * (m + 4.0 * (alpha + 1.0)));
}

double jacobi_right_boundary_asymptotic(double alpha, double beta, std::size_t n) {
  const double shift = dn(n) + (alpha + beta + 1.0) / 2.0;
  return alpha * (alpha + 2.0) / (2.0 * shift * shift);
}

}  // namespace formula

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

class ReportBuilder {
public:
  ReportBuilder(const RootVector& z, const BoundOptions& opt) : z_(z), opt_(opt) {}

  BoundReport& add(std::string id, std::optional<std::size_t> index, BoundDirection dir, double bound,
                   double observed, BoundKind kind = BoundKind::Derived) {
    BoundReport r;
    r.bound_id = std::move(id);
    r.family = z_.family;
    r.n = z_.n;
    r.index = index;
    r.kind = kind;
    r.direction = dir;
    r.bound_value = bound;
    r.observed_value = observed;
    if (dir == BoundDirection::Lower) {
      r.slack = observed - bound;
      r.sharpness = observed / bound;
    } else {
      r.slack = bound - observed;
      r.sharpness = observed == 0.0 ? std::numeric_limits<double>::infinity() : bound / observed;
    }
    if (dir == BoundDirection::Lower && !(bound > 0.0)) {
      r.status = BoundStatus::Vacuous;
      r.sharpness = kNaN;
      r.holds = true;
    } else {
      r.holds = r.slack >= -opt_.tolerance * std::max(std::abs(bound), 1.0);
    }
    out_.push_back(std::move(r));
    return out_.back();
  }

  void not_applicable(std::string id, BoundDirection dir, BoundKind kind = BoundKind::Derived) {
    BoundReport r;
    r.bound_id = std::move(id);
    r.family = z_.family;
    r.n = z_.n;
    r.kind = kind;
    r.status = BoundStatus::NotApplicable;
    r.direction = dir;
    r.bound_value = kNaN;
    r.observed_value = kNaN;
    r.slack = kNaN;
    r.sharpness = kNaN;
    r.holds = true;
    out_.push_back(std::move(r));
  }

  std::vector<BoundReport> take() { return std::move(out_); }

private:
  const RootVector& z_;
  const BoundOptions& opt_;
  std::vector<BoundReport> out_;
};

void require(const RootVector& z, FamilyKind kind, const char* op) {
  if (!z.family.is(kind)) {
    throw Error(ErrorKind::FamilyMismatch,
                std::string(op) + " expects " + std::string(to_string(kind)) + " roots");
  }
  if (z.size() == 0 || z.size() != z.n) throw Error(ErrorKind::EmptyProblem, "root vector is empty or inconsistent");
}

// Consecutive gap with 1-based index i (i = 1..N-1), positive in either ordering.
double gap(const RootVector& z, std::size_t i) { return std::abs(z[i] - z[i - 1]); }

// 1-based index i of the smallest consecutive gap.
std::size_t argmin_gap(const RootVector& z) {
  std::size_t best = 1;
  for (std::size_t i = 2; i < z.size(); ++i) {
    if (gap(z, i) < gap(z, best)) best = i;
  }
  return best;
}

struct PairSums {
  double inv2 = 0.0;
  double inv4 = 0.0;
};

PairSums pair_sums(const RootVector& z, std::size_t i) {
  PairSums s;
  for (std::size_t l = 0; l < z.size(); ++l) {
    if (l == i) continue;
    const double d2 = (z[i] - z[l]) * (z[i] - z[l]);
    s.inv2 += 1.0 / d2;
    s.inv4 += 1.0 / (d2 * d2);
  }
  return s;
}

}  // namespace

std::vector<BoundReport> hermite_diag_bound(const RootVector& z, const BoundOptions& opt) {
  require(z, FamilyKind::Hermite, "hermite_diag_bound");
  const std::size_t n = z.size();
  if (n < 2) throw Error(ErrorKind::Precondition, "Hermite bounds require N >= 2");
  ReportBuilder b(z, opt);
  const std::vector<double> lhs = diag_of_square_closed_form(z);
  using D = BoundDirection;
  for (std::size_t i = 0; i < n; ++i) {
    const PairSums s = pair_sums(z, i);
    b.add("hermite.diag_sq", i + 1, D::Upper, formula::hermite_diag_sq(n), lhs[i]);
    b.add("hermite.inv4_sum", i + 1, D::Upper, formula::hermite_inv4_sum(n), s.inv4);
    b.add("hermite.inv4_sum.weak", i + 1, D::Upper, formula::hermite_inv4_sum_weak(n), s.inv4);
    b.add("hermite.inv2_sum", i + 1, D::Upper, formula::hermite_inv2_sum(n), s.inv2);
    b.add("hermite.inv2_sum.weak", i + 1, D::Upper, formula::hermite_inv2_sum_weak(n), s.inv2);
  }
  for (std::size_t i = 1; i < n; ++i) {
    const double g = gap(z, i);
    b.add("hermite.gap", i, D::Lower, formula::hermite_gap(n), g);
    b.add("hermite.gap.weak", i, D::Lower, formula::hermite_gap_weak(n), g);
    b.add("hermite.gap.k2", i, D::Lower, formula::hermite_gap_k2(n), g, BoundKind::Comparator)
        .references.push_back({"hermite.gap", formula::hermite_gap_k2(n) / formula::hermite_gap(n)});
  }
  return b.take();
}

std::vector<BoundReport> laguerre_bounds(const RootVector& z, const BoundOptions& opt) {
  require(z, FamilyKind::Laguerre, "laguerre_bounds");
  const std::size_t n = z.size();
  const double nu = z.family.nu();
  ReportBuilder b(z, opt);
  using D = BoundDirection;
  const std::vector<double> lhs = diag_of_square_closed_form(z);
  for (std::size_t i = 0; i < n; ++i) {
    b.add("laguerre.diag_sq", i + 1, D::Upper, formula::laguerre_diag_sq(n), lhs[i]);
  }
  b.add("laguerre.smallest_root", n, D::Lower, formula::laguerre_smallest_root(nu, n), z[n - 1]);
  if (n >= 2) {
    for (std::size_t i = 1; i < n; ++i) {
      const double g = gap(z, i);
      b.add("laguerre.gap", i, D::Lower, formula::laguerre_gap(nu, n), g);
      b.add("laguerre.gap.weak", i, D::Lower, formula::laguerre_gap_weak(nu, n), g);
      if (nu >= 1.0) {
        b.add("laguerre.gap_szego", i, D::Lower, formula::laguerre_gap_szego(nu, n), g);
        b.add("laguerre.gap_szego.weak", i, D::Lower, formula::laguerre_gap_szego_weak(nu, n), g);
      }
      b.add("laguerre.sqrt_gap", i, D::Lower, formula::laguerre_sqrt_gap(n), std::sqrt(z[i - 1]) - std::sqrt(z[i]));
    }
    if (nu < 1.0) {
      b.not_applicable("laguerre.gap_szego", D::Lower);
      b.not_applicable("laguerre.gap_szego.weak", D::Lower);
    }
  }
  return b.take();
}

std::vector<BoundReport> laguerre_comparators(const RootVector& z, const BoundOptions& opt) {
  require(z, FamilyKind::Laguerre, "laguerre_comparators");
  const std::size_t n = z.size();
  const double nu = z.family.nu();
  ReportBuilder b(z, opt);
  using D = BoundDirection;
  constexpr auto C = BoundKind::Comparator;

  const double szego = formula::laguerre_smallest_root_szego(nu, n);
  b.add("laguerre.smallest_root.szego", n, D::Lower, szego, z[n - 1], C)
      .references.push_back({"laguerre.smallest_root", szego / formula::laguerre_smallest_root(nu, n)});

  const std::pair<const char*, double> gaps[] = {
      {"laguerre.gap.cd", formula::laguerre_gap_cd(nu, n)},
      {"laguerre.gap.k2", formula::laguerre_gap_k2(nu, n)},
      {"laguerre.gap.jt", formula::laguerre_gap_jt(nu, n)},
  };
  if (n < 2) {
    for (const auto& [id, value] : gaps) b.not_applicable(id, D::Lower, C);
    return b.take();
  }
  const std::size_t at = argmin_gap(z);
  for (const auto& [id, value] : gaps) {
    BoundReport& r = b.add(id, at, D::Lower, value, gap(z, at), C);
    r.references.push_back({"laguerre.gap", value / formula::laguerre_gap(nu, n)});
    if (nu >= 1.0) r.references.push_back({"laguerre.gap_szego", value / formula::laguerre_gap_szego(nu, n)});
  }
  return b.take();
}

std::vector<BoundReport> jacobi_bounds(const RootVector& z, const BoundOptions& opt) {
  require(z, FamilyKind::Jacobi, "jacobi_bounds");
  const std::size_t n = z.size();
  const double al = z.family.alpha();
  const double be = z.family.beta();
  const double m = max_eigenvalue(al, be, n);
  const bool symmetric = al == be;
  ReportBuilder b(z, opt);
  using D = BoundDirection;

  const std::vector<double> lhs = diag_of_square_closed_form(z);
  for (std::size_t i = 0; i < n; ++i) {
    b.add("jacobi.diag_sq", i + 1, D::Upper, formula::jacobi_diag_sq(m), lhs[i]);
  }
  // Ascending order: z[0] is nearest -1, z[n-1] nearest +1.
  const double right = 1.0 - z[n - 1];
  const double left = 1.0 + z[0];
  b.add("jacobi.right_boundary", n, D::Lower, formula::jacobi_right_boundary(al, be, m), right);
  b.add("jacobi.right_boundary.weak", n, D::Lower, formula::jacobi_right_boundary_weak(al, m), right);
  b.add("jacobi.left_boundary", 1, D::Lower, formula::jacobi_left_boundary(al, be, m), left);
  b.add("jacobi.left_boundary.weak", 1, D::Lower, formula::jacobi_left_boundary_weak(be, m), left);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (1.0 - z[i]) * (1.0 + z[i]);
    b.add("jacobi.one_minus_sq", i + 1, D::Lower, formula::jacobi_one_minus_sq(al, be, m), w);
    if (symmetric) b.add("jacobi.one_minus_sq.symmetric", i + 1, D::Lower, formula::jacobi_one_minus_sq_symmetric(al, m), w);
  }
  if (!symmetric) b.not_applicable("jacobi.one_minus_sq.symmetric", D::Lower);
  if (n >= 2) {
    for (std::size_t i = 1; i < n; ++i) {
      b.add("jacobi.gap", i, D::Lower, formula::jacobi_gap(al, be, m), gap(z, i));
      if (symmetric) b.add("jacobi.gap.symmetric", i, D::Lower, formula::jacobi_gap_symmetric(al, m), gap(z, i));
    }
    if (!symmetric) b.not_applicable("jacobi.gap.symmetric", D::Lower);
  }
  return b.take();
}

BoundReport jacobi_comparator(const RootVector& z, const BoundOptions& opt) {
  require(z, FamilyKind::Jacobi, "jacobi_comparator");
  const std::size_t n = z.size();
  const double al = z.family.alpha();
  const double be = z.family.beta();
  ReportBuilder b(z, opt);
  const char* id = "jacobi.right_boundary.asymptotic";
  if (!(al > -0.5 && be > -0.5)) {
    b.not_applicable(id, BoundDirection::Lower, BoundKind::Comparator);
    return b.take().front();
  }
  const double value = formula::jacobi_right_boundary_asymptotic(al, be, n);
  const double m = max_eigenvalue(al, be, n);
  b.add(id, n, BoundDirection::Lower, value, 1.0 - z[n - 1], BoundKind::Comparator)
      .references.push_back({"jacobi.right_boundary", value / formula::jacobi_right_boundary(al, be, m)});
  return b.take().front();
}

std::vector<BoundReport> all_bounds(const RootVector& z, const BoundOptions& opt) {
  std::vector<BoundReport> out;
  switch (z.family.kind()) {
    case FamilyKind::Hermite:
      out = hermite_diag_bound(z, opt);
      break;
    case FamilyKind::Laguerre: {
      out = laguerre_bounds(z, opt);
      auto c = laguerre_comparators(z, opt);
      out.insert(out.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
      break;
    }
    case FamilyKind::Jacobi:
      out = jacobi_bounds(z, opt);
      out.push_back(jacobi_comparator(z, opt));
      break;
  }
  return out;
}

SharpnessSummary sharpness_summary(const std::vector<BoundReport>& reports) {
  SharpnessSummary out;
  if (reports.empty()) return out;
  out.empty = false;
  out.family = reports.front().family;
  out.n = reports.front().n;
  struct Acc {
    std::size_t count = 0;
    double worst = std::numeric_limits<double>::infinity();
    double sum = 0.0;
  };
  std::map<std::string, Acc> acc;
  double diag_total = 0.0;
  std::size_t diag_count = 0;
  const std::string diag_id = std::string(to_string(out.family->kind())) + ".diag_sq";
  for (const BoundReport& r : reports) {
    if (r.family != *out.family || r.n != out.n) {
      throw Error(ErrorKind::Precondition, "sharpness_summary needs reports from a single family and N");
    }
    if (r.status != BoundStatus::Evaluated || !std::isfinite(r.sharpness)) continue;
    Acc& a = acc[r.bound_id];
    ++a.count;
    a.worst = std::min(a.worst, r.sharpness);
    a.sum += r.sharpness;
    if (r.bound_id == diag_id) {
      diag_total += r.observed_value;
      ++diag_count;
    }
  }
  for (const auto& [id, a] : acc) out.per_bound.push_back({id, a.count, a.worst, a.sum / static_cast<double>(a.count)});

  const double nn = static_cast<double>(out.n);
  if (diag_count == out.n) {
    if (out.family->is(FamilyKind::Hermite) && out.n >= 2) {
      out.aggregate_ratio = diag_total / (nn * (nn - 1.0) * (2.0 * nn - 1.0) / 6.0);
    } else if (out.family->is(FamilyKind::Laguerre)) {
      out.aggregate_ratio = diag_total / (nn * (2.0 * nn - 1.0) * (2.0 * nn + 1.0) / 3.0);
    }
  }
  return out;
}

}  // namespace rootgap
