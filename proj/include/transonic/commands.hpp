#pragma once

#include <iosfwd>
#include <string>

#include "transonic/run_config.hpp"

namespace transonic::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;            // success / Transonic
inline constexpr int kExitVerifyFailed = 1;  // a verification check failed
inline constexpr int kExitInvalidInput = 2;  // unreadable or inadmissible config
inline constexpr int kExitNoShock = 3;       // valid config but no interior shock

/// Solve the configuration: report classification, entropy constants, the
/// shock radius with both limiting states and jump residuals, and write
/// solution.csv (duplicated breakpoint row at r_s) into output_dir.
int cmd_solve(const RunConfig& run, std::ostream& out, std::ostream& err);

/// Emit one of the curve families as CSV: "k" (entropy curves at r=a, r=R),
/// "h" (momentum-flux curves plus the shared-entropy misuse curve), "j"
/// (reduced functional sweep), "i" (perturbation scan at eta*).
int cmd_curves(const RunConfig& run, const std::string& which, std::ostream& out,
               std::ostream& err);

/// Run the invariant suite and print one pass/fail line per check.
int cmd_verify(const RunConfig& run, std::ostream& out, std::ostream& err);

/// Print the one-sided derivative comparison at both endpoints:
/// finite differences of the quadrature functional against the closed form.
int cmd_jprime_table(const RunConfig& run, std::ostream& out, std::ostream& err);

}  // namespace transonic::cli
