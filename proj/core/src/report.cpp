#include "rootgap/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "rootgap/error.hpp"
#include "rootgap/format.hpp"

namespace rootgap {

using Json = nlohmann::ordered_json;

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::Roots: return "roots";
    case Command::Verify: return "verify";
    case Command::Bounds: return "bounds";
  }
  return "unknown";
}

const std::vector<double>& default_nu_grid() {
  static const std::vector<double> grid{0.1, 0.5, 1.0, 2.0, 10.0, 50.0};
  return grid;
}

const std::vector<std::pair<double, double>>& default_jacobi_grid() {
  static const std::vector<std::pair<double, double>> grid{
      {-0.5, -0.5}, {0.0, 0.0}, {1.0, -0.9}, {2.0, 3.0}, {10.0, 10.0}};
  return grid;
}

namespace {

std::vector<FamilyKind> resolved_families(const SweepConfig& c) {
  std::vector<FamilyKind> f = c.families;
  if (f.empty()) f = {FamilyKind::Hermite, FamilyKind::Laguerre, FamilyKind::Jacobi};
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

std::vector<double> resolved_nu(const SweepConfig& c) {
  std::vector<double> v = c.nu_grid.empty() ? default_nu_grid() : c.nu_grid;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::pair<double, double>> resolved_jacobi(const SweepConfig& c) {
  auto v = c.jacobi_grid.empty() ? default_jacobi_grid() : c.jacobi_grid;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t default_n_min(FamilyKind k) { return k == FamilyKind::Hermite ? 2 : 1; }
constexpr std::size_t kDefaultNMax = 40;

template <class Result, class Fn>
std::vector<Result> parallel_map(const std::vector<SweepPoint>& points, unsigned threads, Fn fn) {
  std::vector<Result> out(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        out[i] = fn(points[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned count = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  count = static_cast<unsigned>(std::min<std::size_t>(count, std::max<std::size_t>(points.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }
  // Rethrow the first failure in sweep order so errors are deterministic too.
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace

std::vector<SweepPoint> expand_sweep(const SweepConfig& config, Command command) {
  if (config.n_step == 0) throw Error(ErrorKind::Precondition, "N step must be positive");
  if (config.n_min && *config.n_min == 0) throw Error(ErrorKind::Precondition, "N must be at least 1");
  if (!(config.tolerance >= 0.0) || !std::isfinite(config.tolerance)) {
    throw Error(ErrorKind::Precondition, "tolerance must be a finite non-negative number");
  }
  std::vector<SweepPoint> points;
  for (FamilyKind kind : resolved_families(config)) {
    std::vector<PolynomialFamily> fams;
    switch (kind) {
      case FamilyKind::Hermite: fams.push_back(PolynomialFamily::hermite()); break;
      case FamilyKind::Laguerre:
        for (double nu : resolved_nu(config)) fams.push_back(PolynomialFamily::laguerre(nu));
        break;
      case FamilyKind::Jacobi:
        for (auto [a, b] : resolved_jacobi(config)) fams.push_back(PolynomialFamily::jacobi(a, b));
        break;
    }
    std::size_t lo = config.n_min.value_or(default_n_min(kind));
    const std::size_t hi = config.n_max.value_or(std::max(kDefaultNMax, lo));
    if (lo > hi) throw Error(ErrorKind::Precondition, "empty N range");
    // The Hermite bounds need two roots.
    if (command == Command::Bounds && kind == FamilyKind::Hermite) lo = std::max<std::size_t>(lo, 2);
    for (const PolynomialFamily& f : fams) {
      for (std::size_t n = lo; n <= hi; n += config.n_step) points.push_back({f, n});
    }
  }
  if (points.empty()) throw Error(ErrorKind::Precondition, "sweep contains no points");
  return points;
}

std::vector<RootsPoint> run_roots(const SweepConfig& config) {
  return parallel_map<RootsPoint>(expand_sweep(config, Command::Roots), config.threads, [](const SweepPoint& p) {
    RootVector rv = compute_roots(p.family, p.n);
    GapStatistics g = gap_statistics(rv);
    return RootsPoint{std::move(rv), g};
  });
}

std::vector<VerifyCheck> verify_point(const SweepPoint& point, bool corrupt_entry) {
  const RootVector rv = compute_roots(point.family, point.n);
  InverseCovariance s = inverse_covariance(rv);
  if (corrupt_entry) {
    const std::size_t j = point.n >= 2 ? 1 : 0;
    s.matrix.set(0, j, s.matrix(0, j) * (1.0 + 1e-3));
  }
  std::vector<VerifyCheck> out;
  auto add = [&](std::string name, double value, double tol) {
    out.push_back({point.family, point.n, std::move(name), value, tol, value <= tol});
  };

  const SpectralMatch sm = spectral_match(s);
  add("spectrum.max_rel_error", sm.max_rel_error, sm.tolerance);
  for (const TraceIdentity& t : trace_identities(s)) add("identity." + t.id, t.rel_residual(), 1e-10);
  add("diag_of_square.max_rel_discrepancy", detail::diag_of_square_unchecked(s).max_rel_discrepancy, 1e-10);
  if (point.family.is(FamilyKind::Laguerre)) {
    const InverseCovariance r = laguerre_S(rv, LaguerreCoordinate::SqrtR);
    add("laguerre.z_vs_sqrt_r.max_rel_diff", max_entrywise_rel_difference(s.matrix, r.matrix), 1e-13);
  }
  if (point.family.is(FamilyKind::Jacobi)) {
    const double b = point.family.beta() + 1.0;
    const double a = point.family.alpha() + 1.0 - b;
    const InverseCovariance e = detail::jacobi_S_ensemble(rv, a, b);
    add("jacobi.ensemble_form.max_rel_diff", max_entrywise_rel_difference(s.matrix, e.matrix), 1e-13);
  }
  return out;
}

std::vector<VerifyCheck> run_verify(const SweepConfig& config) {
  const bool corrupt = config.corrupt_entry;
  auto per_point = parallel_map<std::vector<VerifyCheck>>(
      expand_sweep(config, Command::Verify), config.threads,
      [corrupt](const SweepPoint& p) { return verify_point(p, corrupt); });
  std::vector<VerifyCheck> out;
  for (auto& v : per_point) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<BoundsPoint> run_bounds(const SweepConfig& config) {
  const BoundOptions opt{config.tolerance};
  return parallel_map<BoundsPoint>(expand_sweep(config, Command::Bounds), config.threads, [opt](const SweepPoint& p) {
    BoundsPoint bp;
    bp.reports = all_bounds(compute_roots(p.family, p.n), opt);
    std::stable_sort(bp.reports.begin(), bp.reports.end(), [](const BoundReport& x, const BoundReport& y) {
      return std::tie(x.bound_id, x.index) < std::tie(y.bound_id, y.index);
    });
    bp.summary = sharpness_summary(bp.reports);
    return bp;
  });
}

int exit_code(const std::vector<VerifyCheck>& checks) noexcept {
  for (const auto& c : checks) {
    if (!c.passed) return kExitCheckFailed;
  }
  return kExitOk;
}

int exit_code(const std::vector<BoundsPoint>& points) noexcept {
  for (const auto& p : points) {
    for (const auto& r : p.reports) {
      if (r.gates() && !r.holds) return kExitCheckFailed;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string family_name(const PolynomialFamily& f) { return std::string(to_string(f.kind())); }

Json json_number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json json_opt(const std::optional<double>& v) { return v ? json_number(*v) : Json(nullptr); }

Json config_json(const SweepConfig& c, Command command) {
  Json j;
  j["command"] = std::string(to_string(command));
  Json fams = Json::array();
  for (FamilyKind k : resolved_families(c)) fams.push_back(std::string(to_string(k)));
  j["families"] = fams;
  j["n_min"] = c.n_min ? Json(*c.n_min) : Json(nullptr);
  j["n_max"] = c.n_max ? Json(*c.n_max) : Json(nullptr);
  j["n_step"] = c.n_step;
  j["nu_grid"] = resolved_nu(c);
  Json grid = Json::array();
  for (auto [a, b] : resolved_jacobi(c)) grid.push_back(Json::array({a, b}));
  j["jacobi_grid"] = grid;
  j["tolerance"] = c.tolerance;
  return j;
}

std::string document(const SweepConfig& c, Command command, Json results, Json summary) {
  Json doc;
  doc["config"] = config_json(c, command);
  doc["results"] = std::move(results);
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

std::string index_text(const std::optional<std::size_t>& i) { return i ? std::to_string(*i) : std::string(); }

}  // namespace

std::string to_csv(const std::vector<RootsPoint>& points) {
  std::ostringstream os;
  os << "family,params,N,i,z_i,gap_i\n";
  for (const RootsPoint& p : points) {
    const RootVector& rv = p.roots;
    for (std::size_t i = 0; i < rv.size(); ++i) {
      os << family_name(rv.family) << ',' << rv.family.params_label() << ',' << rv.n << ',' << i + 1 << ','
         << format_double(rv[i]) << ',';
      if (i + 1 < rv.size()) os << format_double(std::abs(rv[i] - rv[i + 1]));
      os << '\n';
    }
  }
  return os.str();
}

std::string to_csv(const std::vector<VerifyCheck>& checks) {
  std::ostringstream os;
  os << "family,params,N,check,value,tolerance,passed\n";
  for (const VerifyCheck& c : checks) {
    os << family_name(c.family) << ',' << c.family.params_label() << ',' << c.n << ',' << c.check << ','
       << format_double(c.value) << ',' << format_double(c.tolerance) << ',' << (c.passed ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string to_csv(const std::vector<BoundsPoint>& points) {
  std::ostringstream os;
  os << "family,params,N,bound_id,index,bound_value,observed_value,slack,holds,sharpness\n";
  for (const BoundsPoint& p : points) {
    for (const BoundReport& r : p.reports) {
      os << family_name(r.family) << ',' << r.family.params_label() << ',' << r.n << ',' << r.bound_id << ','
         << index_text(r.index) << ',' << format_double(r.bound_value) << ',' << format_double(r.observed_value) << ','
         << format_double(r.slack) << ',' << (r.holds ? "true" : "false") << ',' << format_double(r.sharpness)
         << '\n';
    }
  }
  return os.str();
}

std::string to_json(const std::vector<RootsPoint>& points, const SweepConfig& config) {
  Json results = Json::array();
  Json summary_points = Json::array();
  for (const RootsPoint& p : points) {
    const RootVector& rv = p.roots;
    for (std::size_t i = 0; i < rv.size(); ++i) {
      Json row;
      row["family"] = family_name(rv.family);
      row["params"] = rv.family.params_label();
      row["N"] = rv.n;
      row["i"] = i + 1;
      row["z_i"] = json_number(rv[i]);
      row["gap_i"] = i + 1 < rv.size() ? json_number(std::abs(rv[i] - rv[i + 1])) : Json(nullptr);
      results.push_back(std::move(row));
    }
    Json s;
    s["family"] = family_name(rv.family);
    s["params"] = rv.family.params_label();
    s["N"] = rv.n;
    s["min_gap"] = json_opt(p.gaps.min_gap);
    s["boundary_low"] = json_opt(p.gaps.boundary_low);
    s["boundary_high"] = json_opt(p.gaps.boundary_high);
    s["polish_skipped"] = static_cast<std::size_t>(std::count(rv.polish_skipped.begin(), rv.polish_skipped.end(), true));
    summary_points.push_back(std::move(s));
  }
  Json summary;
  summary["exit_code"] = static_cast<int>(kExitOk);
  summary["points"] = std::move(summary_points);
  return document(config, Command::Roots, std::move(results), std::move(summary));
}

std::string to_json(const std::vector<VerifyCheck>& checks, const SweepConfig& config) {
  Json results = Json::array();
  std::size_t failed = 0;
  std::vector<std::pair<std::string, double>> worst;
  for (const VerifyCheck& c : checks) {
    Json row;
    row["family"] = family_name(c.family);
    row["params"] = c.family.params_label();
    row["N"] = c.n;
    row["check"] = c.check;
    row["value"] = json_number(c.value);
    row["tolerance"] = json_number(c.tolerance);
    row["passed"] = c.passed;
    results.push_back(std::move(row));
    if (!c.passed) ++failed;
    auto it = std::find_if(worst.begin(), worst.end(), [&](const auto& w) { return w.first == c.check; });
    if (it == worst.end()) {
      worst.emplace_back(c.check, c.value);
    } else {
      it->second = std::max(it->second, c.value);
    }
  }
  std::sort(worst.begin(), worst.end());
  Json summary;
  summary["exit_code"] = exit_code(checks);
  summary["checks"] = checks.size();
  summary["failed"] = failed;
  Json w = Json::object();
  for (const auto& [name, value] : worst) w[name] = json_number(value);
  summary["worst"] = std::move(w);
  return document(config, Command::Verify, std::move(results), std::move(summary));
}

std::string to_json(const std::vector<BoundsPoint>& points, const SweepConfig& config) {
  Json results = Json::array();
  Json summary_points = Json::array();
  std::size_t gating = 0;
  std::size_t violations = 0;
  for (const BoundsPoint& p : points) {
    for (const BoundReport& r : p.reports) {
      Json row;
      row["family"] = family_name(r.family);
      row["params"] = r.family.params_label();
      row["N"] = r.n;
      row["bound_id"] = r.bound_id;
      row["index"] = r.index ? Json(*r.index) : Json(nullptr);
      row["bound_value"] = json_number(r.bound_value);
      row["observed_value"] = json_number(r.observed_value);
      row["slack"] = json_number(r.slack);
      row["holds"] = r.holds;
      row["sharpness"] = json_number(r.sharpness);
      row["kind"] = std::string(to_string(r.kind));
      row["status"] = std::string(to_string(r.status));
      row["direction"] = std::string(to_string(r.direction));
      Json refs = Json::array();
      for (const ReferenceRatio& ref : r.references) {
        refs.push_back(Json{{"reference_id", ref.reference_id}, {"ratio", json_number(ref.ratio)}});
      }
      row["references"] = std::move(refs);
      results.push_back(std::move(row));
      if (r.gates()) {
        ++gating;
        if (!r.holds) ++violations;
      }
    }
    const SharpnessSummary& s = p.summary;
    Json sp;
    sp["family"] = s.family ? family_name(*s.family) : std::string();
    sp["params"] = s.family ? s.family->params_label() : std::string();
    sp["N"] = s.n;
    sp["aggregate_ratio"] = json_opt(s.aggregate_ratio);
    Json per = Json::array();
    for (const BoundSharpness& b : s.per_bound) {
      per.push_back(Json{{"bound_id", b.bound_id},
                         {"count", b.count},
                         {"worst", json_number(b.worst)},
                         {"mean", json_number(b.mean)}});
    }
    sp["per_bound"] = std::move(per);
    summary_points.push_back(std::move(sp));
  }
  Json summary;
  summary["exit_code"] = exit_code(points);
  summary["gating_rows"] = gating;
  summary["violations"] = violations;
  summary["points"] = std::move(summary_points);
  return document(config, Command::Bounds, std::move(results), std::move(summary));
}

}  // namespace rootgap
