// rootgap: roots of classical orthogonal polynomials, spectra of the
// associated inverse covariance matrices, and root-gap bound sweeps.
//
//   rootgap roots  --family hermite --n 2
//   rootgap verify --family laguerre --nu 1 --n 10
//   rootgap bounds --format json --out bounds.json

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootgap/error.hpp"
#include "rootgap/report.hpp"

namespace {

struct Options {
  std::string family;
  std::vector<double> nu;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::optional<std::size_t> n;
  std::optional<std::size_t> n_min;
  std::optional<std::size_t> n_max;
  std::size_t n_step = 1;
  std::string format = "csv";
  std::string out;
  std::optional<double> tol;
  unsigned threads = 0;
  bool corrupt_entry = false;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void add_sweep_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "Polynomial family (default: all three)")
      ->check(CLI::IsMember({"hermite", "laguerre", "jacobi"}));
  cmd->add_option("--nu", o.nu, "Laguerre parameter(s) nu > 0")->delimiter(',');
  cmd->add_option("--alpha", o.alpha, "Jacobi alpha(s) > -1, paired with --beta")->delimiter(',');
  cmd->add_option("--beta", o.beta, "Jacobi beta(s) > -1, paired with --alpha")->delimiter(',');
  auto* n = cmd->add_option("--n", o.n, "Single polynomial degree N >= 1");
  cmd->add_option("--n-min", o.n_min, "Smallest degree of the sweep")->excludes(n);
  cmd->add_option("--n-max", o.n_max, "Largest degree of the sweep")->excludes(n);
  cmd->add_option("--n-step", o.n_step, "Degree increment")->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "Output path (default: stdout)");
  cmd->add_option("--tol", o.tol, "Relative tolerance coefficient for bound checks (default 1e-10)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--threads", o.threads, "Worker threads (default: hardware concurrency)");
}

rootgap::SweepConfig to_config(const Options& o) {
  using rootgap::FamilyKind;
  rootgap::SweepConfig c;
  if (o.family == "hermite") c.families = {FamilyKind::Hermite};
  if (o.family == "laguerre") c.families = {FamilyKind::Laguerre};
  if (o.family == "jacobi") c.families = {FamilyKind::Jacobi};

  if (!o.nu.empty() && !o.family.empty() && o.family != "laguerre") {
    throw UsageError("--nu only applies to --family laguerre");
  }
  if ((!o.alpha.empty() || !o.beta.empty()) && !o.family.empty() && o.family != "jacobi") {
    throw UsageError("--alpha/--beta only apply to --family jacobi");
  }
  if (o.alpha.size() != o.beta.size()) throw UsageError("--alpha and --beta must be given the same number of times");

  c.nu_grid = o.nu;
  for (std::size_t i = 0; i < o.alpha.size(); ++i) c.jacobi_grid.emplace_back(o.alpha[i], o.beta[i]);
  if (o.n) {
    c.n_min = o.n;
    c.n_max = o.n;
  } else {
    c.n_min = o.n_min;
    c.n_max = o.n_max;
  }
  c.n_step = o.n_step;
  if (o.tol) c.tolerance = *o.tol;
  c.format = o.format == "json" ? rootgap::OutputFormat::Json : rootgap::OutputFormat::Csv;
  c.out_path = o.out;
  c.threads = o.threads;
  c.corrupt_entry = o.corrupt_entry;
  return c;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + path);
  f << text;
}

int run(rootgap::Command command, const Options& opts) {
  const rootgap::SweepConfig config = to_config(opts);
  const bool json = config.format == rootgap::OutputFormat::Json;
  switch (command) {
    case rootgap::Command::Roots: {
      const auto res = rootgap::run_roots(config);
      emit(json ? rootgap::to_json(res, config) : rootgap::to_csv(res), config.out_path);
      return rootgap::kExitOk;
    }
    case rootgap::Command::Verify: {
      const auto res = rootgap::run_verify(config);
      emit(json ? rootgap::to_json(res, config) : rootgap::to_csv(res), config.out_path);
      std::size_t failed = 0;
      for (const auto& c : res) failed += c.passed ? 0 : 1;
      std::cerr << "verify: " << res.size() << " checks, " << failed << " failed\n";
      return rootgap::exit_code(res);
    }
    case rootgap::Command::Bounds: {
      const auto res = rootgap::run_bounds(config);
      emit(json ? rootgap::to_json(res, config) : rootgap::to_csv(res), config.out_path);
      std::size_t gating = 0;
      std::size_t violations = 0;
      for (const auto& p : res) {
        for (const auto& r : p.reports) {
          if (!r.gates()) continue;
          ++gating;
          violations += r.holds ? 0 : 1;
        }
      }
      std::cerr << "bounds: " << gating << " derived-bound checks, " << violations << " violations\n";
      return rootgap::exit_code(res);
    }
  }
  return rootgap::kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal polynomial roots, inverse covariance spectra and root-gap bounds"};
  app.require_subcommand(1);

  Options opts;
  std::map<CLI::App*, rootgap::Command> commands;
  auto* roots = app.add_subcommand("roots", "Ordered roots, gaps and boundary distances");
  auto* verify = app.add_subcommand("verify", "Spectra, trace identities and matrix consistency checks");
  auto* bounds = app.add_subcommand("bounds", "Evaluate every bound and comparator over a sweep");
  commands[roots] = rootgap::Command::Roots;
  commands[verify] = rootgap::Command::Verify;
  commands[bounds] = rootgap::Command::Bounds;
  for (auto* cmd : {roots, verify, bounds}) add_sweep_options(cmd, opts);
  verify->add_flag("--corrupt-entry", opts.corrupt_entry, "Perturb one matrix entry (negative control)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? rootgap::kExitOk : rootgap::kExitUsage;
  }

  rootgap::Command command = rootgap::Command::Roots;
  for (const auto& [cmd, c] : commands) {
    if (cmd->parsed()) command = c;
  }

  try {
    return run(command, opts);
  } catch (const UsageError& e) {
    std::cerr << "rootgap: " << e.what() << "\n";
    return rootgap::kExitUsage;
  } catch (const rootgap::Error& e) {
    std::cerr << "rootgap: " << e.what() << "\n";
    return e.is_numerical() ? rootgap::kExitNumerical : rootgap::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "rootgap: " << e.what() << "\n";
    return rootgap::kExitNumerical;
  }
}
