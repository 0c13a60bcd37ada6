#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eocloak/analytic.hpp"
#include "eocloak/config_io.hpp"
#include "eocloak/validation.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace eocloak;

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;
constexpr int kExitValidationFailure = 4;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_ = Clock::now();
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

void emit_manifest(const fs::path& dir, RunManifest m) {
  m.version = EOCLOAK_VERSION;
  write_file(dir / "manifest.json", to_json(m).dump(2) + "\n");
}

int cmd_condition(const std::vector<double>& annulus, const std::vector<double>& confocal,
                  int order, const std::string& orientation, const std::string& units_path) {
  json out;
  double eps_ratio, zeta0;
  if (!annulus.empty()) {
    const AnnulusDesign d = annulus_condition(annulus[0], annulus[1], annulus[2], order);
    eps_ratio = d.eps_ratio;
    zeta0 = d.zeta0;
    out["kind"] = "annulus";
    out["radii"] = annulus;
  } else {
    const Orientation o = (orientation == "y") ? Orientation::Y : Orientation::X;
    const ConfocalDesign d = confocal_condition(confocal[0], confocal[1], confocal[2], order, o);
    eps_ratio = d.eps_ratio;
    zeta0 = d.zeta0;
    out["kind"] = "confocal";
    out["xi"] = confocal;
    out["orientation"] = orientation;
  }
  out["n"] = order;
  out["epsilon_ratio"] = eps_ratio;
  out["zeta0"] = zeta0;
  if (!units_path.empty()) {
    const UnitSystem u = load_units(units_path);
    out["epsilon_s_dimensional"] = eps_ratio * u.permittivity;
    out["zeta_dimensional_V"] = to_dimensional(zeta0, Quantity::Zeta, u);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_solve(const std::string& config_path, const std::string& out_dir,
              const std::vector<double>& window, const std::vector<int>& res, int n_override) {
  const Stopwatch timer;
  const RunConfig rc = load_config(config_path, n_override);
  validate_config(rc.cloak);

  const ElectricSolution esol = solve_electric(rc.cloak);
  const PressureSolution psol = solve_pressure(rc.cloak, esol);

  GridWindow gw{window[0], window[1], window[2], window[3]};
  const GridExport grid = export_grid(rc.cloak, esol, psol, gw, res[0], res[1]);
  const CloakErrorSummary summary = cloak_errors(rc.cloak, esol, psol);

  fs::create_directories(out_dir);
  {
    std::ofstream csv(fs::path(out_dir) / "grid.csv");
    if (!csv) throw std::runtime_error("cannot write grid.csv");
    write_grid_csv(csv, grid);
  }
  write_file(fs::path(out_dir) / "summary.json", to_json(summary).dump(2) + "\n");

  RunManifest m;
  m.subcommand = "solve";
  m.resolved_config = rc.resolved;
  m.n_nodes = rc.n_nodes;
  m.outputs = {"grid.csv", "summary.json"};
  m.wall_seconds = timer.seconds();
  m.config_hash = content_hash(rc.resolved);
  emit_manifest(out_dir, m);
  std::cout << "wrote " << out_dir << "/grid.csv (max|p-P| " << summary.max_p_err << ")\n";
  return 0;
}

int cmd_optimize(const std::string& config_path, const std::string& out_dir,
                 const std::string& slip_flag, int n_override) {
  const Stopwatch timer;
  const RunConfig rc = load_config(config_path, n_override);
  const SlipSource slip =
      slip_flag.empty() ? rc.slip_source : parse_slip_source(slip_flag);

  const OptimizationReport rep =
      optimize_cloak(rc.cloak, slip, rc.eps_interval, rc.zeta_interval);

  fs::create_directories(out_dir);
  write_file(fs::path(out_dir) / "report.json", to_json(rep).dump(2) + "\n");

  RunManifest m;
  m.subcommand = "optimize";
  m.resolved_config = rc.resolved;
  m.resolved_config["slip_source"] = to_string(slip);
  m.resolved_config["epsilon_interval"] = {rep.eps_interval.lo, rep.eps_interval.hi};
  m.resolved_config["zeta_interval"] = {rep.zeta_interval.lo, rep.zeta_interval.hi};
  m.n_nodes = rc.n_nodes;
  m.outputs = {"report.json"};
  m.wall_seconds = timer.seconds();
  m.config_hash = content_hash(rc.resolved);
  emit_manifest(out_dir, m);
  std::cout << "epsilon_opt " << rep.eps_opt << "  zeta_opt " << rep.zeta_opt << "  G " << rep.G
            << "  F " << rep.F << "\n";
  return 0;
}

int cmd_validate(const std::string& level) {
  const std::vector<CheckResult> results =
      (level == "full") ? run_acceptance_checks() : run_fast_checks();
  for (const CheckResult& r : results)
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
  return all_passed(results) ? 0 : kExitValidationFailure;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Electro-osmotic cloak designer and boundary-integral solver"};
  app.require_subcommand(1);

  // condition
  auto* condition = app.add_subcommand("condition", "closed-form cloak conditions");
  std::vector<double> annulus, confocal;
  int order = 1;
  std::string orientation = "x", units_path;
  auto* ann_opt = condition->add_option("--annulus", annulus, "radii r_o r_i r_e")->expected(3);
  auto* con_opt =
      condition->add_option("--confocal", confocal, "elliptic radii xi_o xi_i xi_e")->expected(3);
  condition->add_option("--n", order, "harmonic order");
  condition->add_option("--orientation", orientation, "x or y (confocal only)")
      ->check(CLI::IsMember({"x", "y"}));
  condition->add_option("--units", units_path, "unit system JSON for dimensional output");
  ann_opt->excludes(con_opt);

  // solve
  auto* solve = app.add_subcommand("solve", "coupled exterior solve and grid export");
  std::string config_path, out_dir = "out";
  std::vector<double> window = {-3.0, 3.0, -3.0, 3.0};
  std::vector<int> res = {101, 101};
  int n_override = 0;
  solve->add_option("--config", config_path, "problem config JSON")->required();
  solve->add_option("--out", out_dir, "output directory");
  solve->add_option("--window", window, "grid window x0 x1 y0 y1")->expected(4);
  solve->add_option("--res", res, "grid resolution NX NY")->expected(2);
  solve->add_option("--N", n_override, "nodes per curve (overrides config)");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "two-stage material optimization");
  std::string opt_config, opt_out = "out", slip_flag;
  int opt_n = 0;
  optimize->add_option("--config", opt_config, "problem config JSON")->required();
  optimize->add_option("--out", opt_out, "output directory");
  optimize->add_option("--slip-source", slip_flag, "exterior or background")
      ->check(CLI::IsMember({"exterior", "background"}));
  optimize->add_option("--N", opt_n, "nodes per curve (overrides config)");

  // validate
  auto* validate = app.add_subcommand("validate", "built-in check suites");
  std::string level = "fast";
  validate->add_option("--level", level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (condition->parsed()) {
      if (annulus.empty() == confocal.empty())
        throw std::invalid_argument("pass exactly one of --annulus / --confocal");
      return cmd_condition(annulus, confocal, order, orientation, units_path);
    }
    if (solve->parsed()) return cmd_solve(config_path, out_dir, window, res, n_override);
    if (optimize->parsed()) return cmd_optimize(opt_config, opt_out, slip_flag, opt_n);
    if (validate->parsed()) return cmd_validate(level);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumericalError;
  }
  return 0;
}
