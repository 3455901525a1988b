#pragma once

// Sweep driver behind the `roots`, `verify` and `bounds` commands, and the
// CSV/JSON serialization of their results.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootgap/bounds.hpp"
#include "rootgap/covariance.hpp"
#include "rootgap/roots.hpp"

namespace rootgap {

enum class Command { Roots, Verify, Bounds };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Command c) noexcept;

/// Exit-code contract of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

struct SweepConfig {
  // Families to sweep; empty means all three.
  std::vector<FamilyKind> families;
  // Unset bounds fall back to the per-family defaults (Hermite 2..40,
  // Laguerre and Jacobi 1..40).
  std::optional<std::size_t> n_min;
  std::optional<std::size_t> n_max;
  std::size_t n_step = 1;
  // Empty grids fall back to the defaults below.
  std::vector<double> nu_grid;
  std::vector<std::pair<double, double>> jacobi_grid;
  // Relative tolerance coefficient for bound checks.
  double tolerance = 1e-10;
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;  // empty: stdout
  unsigned threads = 0;  // 0: hardware concurrency
  // Test hook for `verify`: perturbs one matrix entry so checks must fail.
  bool corrupt_entry = false;
};

const std::vector<double>& default_nu_grid();
const std::vector<std::pair<double, double>>& default_jacobi_grid();

struct SweepPoint {
  PolynomialFamily family;
  std::size_t n = 0;
};

/// Expands the config into sweep points ordered by (family, parameters, N).
/// Throws Precondition for an empty or invalid range and ParameterDomain for
/// invalid grid entries.
std::vector<SweepPoint> expand_sweep(const SweepConfig& config, Command command);

struct RootsPoint {
  RootVector roots;
  GapStatistics gaps;
};

struct VerifyCheck {
  PolynomialFamily family;
  std::size_t n = 0;
  std::string check;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct BoundsPoint {
  std::vector<BoundReport> reports;  // sorted by (bound_id, index)
  SharpnessSummary summary;
};

std::vector<RootsPoint> run_roots(const SweepConfig& config);
std::vector<VerifyCheck> run_verify(const SweepConfig& config);
std::vector<BoundsPoint> run_bounds(const SweepConfig& config);

/// Verification checks for one sweep point: spectral match, trace
/// identities, diagonal-of-square consistency and (Laguerre) equality of
/// the Z and SqrtR matrices.
std::vector<VerifyCheck> verify_point(const SweepPoint& point, bool corrupt_entry = false);

int exit_code(const std::vector<VerifyCheck>& checks) noexcept;
int exit_code(const std::vector<BoundsPoint>& points) noexcept;

std::string to_csv(const std::vector<RootsPoint>& points);
std::string to_csv(const std::vector<VerifyCheck>& checks);
std::string to_csv(const std::vector<BoundsPoint>& points);

std::string to_json(const std::vector<RootsPoint>& points, const SweepConfig& config);
std::string to_json(const std::vector<VerifyCheck>& checks, const SweepConfig& config);
std::string to_json(const std::vector<BoundsPoint>& points, const SweepConfig& config);

}  // namespace rootgap
