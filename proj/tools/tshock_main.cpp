#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "transonic/commands.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string output_dir;
  long long sweep_n = -1;
  double tol_root = -1.0;
  double tol_quad = -1.0;
};

void add_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("config", flags.config_path, "configuration file (key=value or JSON)")
      ->required();
  sub->add_option("--output-dir", flags.output_dir, "directory for CSV artifacts");
  sub->add_option("--sweep-n", flags.sweep_n, "sample count for sweeps (default 2001)");
  sub->add_option("--tol-root", flags.tol_root, "free-boundary root tolerance");
  sub->add_option("--tol-quad", flags.tol_quad, "quadrature absolute tolerance");
}

int load_and_override(const CommonFlags& flags, transonic::RunConfig& run) {
  try {
    run = transonic::parse_run_config_file(flags.config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return transonic::cli::kExitInvalidInput;
  }
  if (!flags.output_dir.empty()) run.output_dir = flags.output_dir;
  if (flags.sweep_n > 0) run.sweep_n = static_cast<std::size_t>(flags.sweep_n);
  if (flags.tol_root > 0.0) run.tol_root = flags.tol_root;
  if (flags.tol_quad > 0.0) run.tol_quad = flags.tol_quad;
  return transonic::cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radially symmetric transonic shock solver for annular potential flow"};
  app.require_subcommand(1);

  CommonFlags solve_flags, curves_flags, verify_flags, table_flags;
  std::string which = "h";

  CLI::App* solve = app.add_subcommand("solve", "locate the shock and write solution.csv");
  add_common(solve, solve_flags);

  CLI::App* curves = app.add_subcommand("curves", "emit a curve family as CSV");
  add_common(curves, curves_flags);
  curves->add_option("--which", which, "curve family: k, h, j or i")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(verify, verify_flags);

  CLI::App* table = app.add_subcommand("jprime-table", "derivative comparison at the endpoints");
  add_common(table, table_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : transonic::cli::kExitInvalidInput;
  }

  transonic::RunConfig run;
  try {
    if (solve->parsed()) {
      if (int rc = load_and_override(solve_flags, run)) return rc;
      return transonic::cli::cmd_solve(run, std::cout, std::cerr);
    }
    if (curves->parsed()) {
      if (int rc = load_and_override(curves_flags, run)) return rc;
      return transonic::cli::cmd_curves(run, which, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      if (int rc = load_and_override(verify_flags, run)) return rc;
      return transonic::cli::cmd_verify(run, std::cout, std::cerr);
    }
    if (table->parsed()) {
      if (int rc = load_and_override(table_flags, run)) return rc;
      return transonic::cli::cmd_jprime_table(run, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return transonic::cli::kExitInvalidInput;
  }
  return transonic::cli::kExitInvalidInput;
}
