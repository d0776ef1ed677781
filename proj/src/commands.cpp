#include "transonic/commands.hpp"

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <ostream>

#include "transonic/csv.hpp"
#include "transonic/variational.hpp"
#include "transonic/verify.hpp"

namespace transonic::cli {

namespace {

std::string out_path(const RunConfig& run, const char* name) {
  return (std::filesystem::path(run.output_dir) / name).string();
}

// Parse and validate, translating failures into the invalid-input exit code.
bool load(const RunConfig& run, ModelConfig& config, std::ostream& err) {
  try {
    config = to_model_config(run);
    return true;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return false;
  }
}

void print_state(std::ostream& out, const char* label, const RadialState& s) {
  out << "  " << label << ": V=" << format_double(s.speed) << " rho=" << format_double(s.rho)
      << " p=" << format_double(s.p) << " k=" << format_double(s.k) << "\n";
}

void print_report_header(std::ostream& out, const ModelConfig& config,
                         const ExistenceReport& rep) {
  out << "classification: " << to_string(rep.classification) << "\n";
  out << "k0 = " << format_double(rep.k0) << "\n";
  out << "k_a = " << format_double(rep.k_a) << "\n";
  out << "k_max(a) = " << format_double(rep.k_max_a) << "  (k0 < k_a < k_max(a): "
      << (rep.entropy_ordering_ok ? "yes" : "no") << ")\n";
  out << "nu = " << format_double(rep.nu) << (rep.v_a_above_nu ? "  (v_a > nu)" : "  (v_a <= nu)")
      << "\n";
  out << "H corners: A=" << format_double(rep.h_a) << " B=" << format_double(rep.h_b)
      << " C=" << format_double(rep.h_c) << " D=" << format_double(rep.h_d) << "\n";
  (void)config;
}

// Tight spec for finite-difference work on the functional; the default
// tolerances are enough for values but not for difference quotients.
ModelConfig tightened(const ModelConfig& config) {
  ModelConfig tight = config;
  tight.numerics.quad.abs_tol = std::min(config.numerics.quad.abs_tol, 1e-12);
  tight.numerics.quad.rel_tol = std::min(config.numerics.quad.rel_tol, 1e-12);
  tight.numerics.quad.max_depth = std::max(config.numerics.quad.max_depth, 48);
  return tight;
}

}  // namespace

int cmd_solve(const RunConfig& run, std::ostream& out, std::ostream& err) {
  ModelConfig config;
  if (!load(run, config, err)) return kExitInvalidInput;

  const ExistenceReport rep = existence_report(config);
  print_report_header(out, config, rep);

  if (rep.classification != FlowClass::Transonic) {
    if (rep.classification == FlowClass::SupersonicOnly)
      out << "H-curves do not cross: the flow stays supersonic on the whole annulus.\n";
    else
      out << "No interior shock: the flow is subsonic on the whole annulus.\n";
    return kExitNoShock;
  }

  const ShockSolution sol = assemble_solution(config, run.sweep_n);
  out << "r_s = " << format_double(sol.r_s) << "\n";
  print_state(out, "supersonic side", sol.state1);
  print_state(out, "subsonic side  ", sol.state2);
  out << "RH residuals: mass=" << format_double(sol.residuals.mass)
      << " momentum=" << format_double(sol.residuals.momentum)
      << " energy=" << format_double(sol.residuals.energy) << "\n";
  out << "Prandtl residual V1*V2 - c*^2 = " << format_double(sol.residuals.prandtl) << "\n";

  CsvTable table;
  table.header = {"r", "V", "rho", "p", "k", "phi"};
  for (const ProfileRow& row : sol.profiles)
    table.rows.push_back({row.r, row.speed, row.rho, row.p, row.k, row.phi});
  const std::string path = out_path(run, "solution.csv");
  write_csv(path, table);
  out << "wrote " << path << "\n";
  return kExitOk;
}

int cmd_curves(const RunConfig& run, const std::string& which, std::ostream& out,
               std::ostream& err) {
  ModelConfig config;
  if (!load(run, config, err)) return kExitInvalidInput;

  CsvTable table;
  std::string path;
  if (which == "k") {
    const GasParameters& gas = config.params;
    table.header = {"v_sq", "k_at_a", "k_at_R"};
    const std::size_t n = run.sweep_n;
    for (std::size_t i = 0; i < n; ++i) {
      const double v_sq =
          gas.q_hat0_sq * static_cast<double>(i) / static_cast<double>(n - 1);
      const double v = std::sqrt(v_sq);
      // the entropy curve vanishes at rest and at the vacuum speed
      const bool edge = i == 0 || i + 1 == n;
      const double k_a_curve = edge ? 0.0 : entropy_from_state(v, config.a, gas);
      const double k_R_curve = edge ? 0.0 : entropy_from_state(v, config.R, gas);
      table.rows.push_back({v_sq, k_a_curve, k_R_curve});
    }
    path = out_path(run, "k_curves.csv");
  } else if (which == "h") {
    table.header = {"r", "h_sup_k0", "h_sub_ka", "h_sub_k0_misuse"};
    // the misuse column evaluates the subsonic branch against the upstream
    // entropy constant, the comparison that hides the crossing
    ModelConfig misuse = config;
    misuse.k_a = config.k0;
    const SweepResult grid = sweep([](double r) { return r; }, config.a, config.R, run.sweep_n);
    for (const auto& [r, unused] : grid.samples) {
      (void)unused;
      table.rows.push_back({r, momentum_flux_H(Branch::Sup, r, config),
                            momentum_flux_H(Branch::Sub, r, config),
                            momentum_flux_H(Branch::Sub, r, misuse)});
    }
    path = out_path(run, "h_curves.csv");
  } else if (which == "j") {
    table.header = {"eta", "j_over_2pi"};
    const SweepResult curve = j_curve(config, run.sweep_n);
    for (const auto& [eta, value] : curve.samples) table.rows.push_back({eta, value});
    path = out_path(run, "j_curve.csv");
  } else if (which == "i") {
    const SaddleReport saddle = saddle_report(config, run.sweep_n);
    if (!(saddle.eta_star > config.a)) {
      err << "error: the perturbation scan needs a nonempty subsonic region (eta* = a)\n";
      return kExitNoShock;
    }
    table.header = {"x", "i_over_2pi"};
    const SweepResult curve = i_curve(config, saddle.eta_star, 249);
    for (const auto& [x, value] : curve.samples) table.rows.push_back({x, value});
    path = out_path(run, "i_curve.csv");
  } else {
    err << "error: unknown curve family '" << which << "' (expected k, h, j or i)\n";
    return kExitInvalidInput;
  }

  write_csv(path, table);
  out << "wrote " << path << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& run, std::ostream& out, std::ostream& err) {
  ModelConfig config;
  if (!load(run, config, err)) return kExitInvalidInput;

  const std::vector<CheckResult> results = run_verification(config, run.sweep_n);
  for (const CheckResult& c : results) {
    if (!c.applicable) {
      out << "[ N/A] " << c.name << ": " << c.detail << "\n";
      continue;
    }
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail
        << "  (measure = " << format_double(c.measure) << ")\n";
  }
  const bool ok = all_passed(results);
  out << (ok ? "all checks passed\n" : "verification FAILED\n");
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_jprime_table(const RunConfig& run, std::ostream& out, std::ostream& err) {
  ModelConfig config;
  if (!load(run, config, err)) return kExitInvalidInput;

  const ModelConfig tight = tightened(config);
  const double h = 1e-3;
  const auto J = [&](double eta) { return reduced_J(eta, tight); };

  // one-sided second-order stencils at the endpoints
  const double fd_R = (3.0 * J(config.R) - 4.0 * J(config.R - h) + J(config.R - 2.0 * h)) /
                      (2.0 * h);
  const double closed_R = J_prime(config.R, config);
  const double fd_a = (-3.0 * J(config.a) + 4.0 * J(config.a + h) - J(config.a + 2.0 * h)) /
                      (2.0 * h);
  const double closed_a = J_prime(config.a, config);

  out << "(1/2pi) J' at eta = R, finite difference : " << format_double(fd_R) << "\n";
  out << "(1/2pi) J' at eta = R, closed form       : " << format_double(closed_R) << "\n";
  out << "(1/2pi) J' at eta = a, finite difference : " << format_double(fd_a) << "\n";
  out << "(1/2pi) J' at eta = a, closed form       : " << format_double(closed_a) << "\n";
  out << "|difference| at R = " << format_double(std::abs(fd_R - closed_R)) << "\n";
  out << "|difference| at a = " << format_double(std::abs(fd_a - closed_a)) << "\n";
  return kExitOk;
}

}  // namespace transonic::cli
