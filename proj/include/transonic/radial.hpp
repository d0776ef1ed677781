#pragma once

#include <stdexcept>
#include <vector>

#include "transonic/gas.hpp"
#include "transonic/numerics.hpp"

namespace transonic {

// Exact solution of the radial inflow model on the annulus a <= r <= R:
// a supersonic branch entering at r=R, a subsonic branch leaving at r=a, and
// (when the momentum-flux curves cross) a circular shock joining them.

struct RegimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PersistenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoRootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoCrossingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Branch { Sup, Sub };

enum class RunMode { Transonic, SubsonicOnly };

enum class FlowClass { Transonic, SubsonicOnly, SupersonicOnly };

const char* to_string(FlowClass c);

// Solver knobs carried with the configuration. root_tol applies to the
// free-boundary roots (shock radius, eta refinement); branch-speed inversion
// always runs at a fixed kernel tolerance.
struct NumericsOptions {
  double root_tol = 1e-12;
  QuadratureSpec quad{};
};

struct ModelConfig {
  GasParameters params{};
  double a = 0.0;
  double R = 0.0;
  double v_a = 0.0;  // subsonic boundary speed at r = a
  double v_0 = 0.0;  // supersonic boundary speed at r = R (unused in SubsonicOnly mode)
  double k0 = 0.0;   // upstream entropy constant
  double k_a = 0.0;  // downstream entropy constant
  RunMode mode = RunMode::Transonic;
  NumericsOptions numerics{};
};

/// Validate boundary data and derive the entropy constants:
/// k0 = entropy_from_state(v_0, R), k_a = entropy_from_state(v_a, a).
/// Throws RegimeError unless v_a < c* < v_0 < sqrt(q_hat0_sq), and
/// PersistenceError if k0 >= k_max_at_radius(a) (the supersonic branch would
/// choke before reaching r = a).
ModelConfig make_config(double gamma, double c_star_sq, double m0, double a, double R,
                        double v_a, double v_0);

/// Shared-entropy demonstration mode: the data at r = R is dropped and both
/// entropy constants equal the one derived from v_a, so the whole annulus
/// carries the subsonic solution.
ModelConfig make_subsonic_only_config(double gamma, double c_star_sq, double m0, double a,
                                      double R, double v_a);

/// Entropy constant carried by a branch (k0 for Sup, k_a for Sub).
double branch_entropy(Branch branch, const ModelConfig& config);

/// The unique speed on the given branch solving entropy_from_state(V, r) = k:
/// the supersonic root in (c*, sqrt(q_hat0_sq)) for Sup, the subsonic root in
/// (0, c*) for Sub. Throws NoRootError if k >= k_max_at_radius(r) (sonic
/// choking) and std::domain_error for r outside [a, R].
double branch_speed(Branch branch, double r, const ModelConfig& config);

/// Radial momentum flux H = M0 (g+1)/(2g) (c*^2/V + V) = r (rho v^2 + p)
/// evaluated on the branch at radius r.
double momentum_flux_H(Branch branch, double r, const ModelConfig& config);

struct RhResiduals {
  double mass;      // rho1 V1 - rho2 V2
  double momentum;  // (rho1 V1^2 + p1) - (rho2 V2^2 + p2)
  double energy;    // (V1^2/2 + i1) - (V2^2/2 + i2)
  double prandtl;   // V1 V2 - c*^2
};

/// Jump residuals between the two branch states at radius r_s. Mass and
/// energy vanish identically on-branch; momentum and the Prandtl product
/// vanish only at the true shock.
RhResiduals rh_residuals(double r_s, const ModelConfig& config);

struct ProfileRow {
  double r;
  double speed;
  double rho;
  double p;
  double k;
  double phi;
};

struct ShockSolution {
  double r_s;
  RadialState state1;  // supersonic side limit
  RadialState state2;  // subsonic side limit
  RhResiduals residuals;
  std::vector<ProfileRow> profiles;  // filled by assemble_solution
};

/// Shock radius from the crossing of the two momentum-flux curves,
/// g(r) = H_sup(k0, r) - H_sub(k_a, r) = 0, bracketed on [a, R]. Throws
/// NoCrossingError when g keeps one sign.
ShockSolution locate_shock(const ModelConfig& config);

struct ExistenceReport {
  FlowClass classification;
  double k0, k_a;
  double k_max_a;  // entropy ceiling at r = a
  double nu;       // c* sqrt((g-1)/(g+1)), lower bound on admissible v_a
  double h_a;      // H_sub(k_a, a)
  double h_b;      // H_sup(k0, a)
  double h_c;      // H_sup(k0, R)
  double h_d;      // H_sub(k_a, R)
  bool entropy_ordering_ok;  // k0 < k_a < k_max_a
  bool v_a_above_nu;
};

/// Classify the configuration. Transonic iff H_D > H_C and H_B > H_A
/// (equivalently c*^2 > Vsub(R) Vsup(R) and c*^2 < Vsup(a) Vsub(a)).
/// H_A >= H_B leaves the whole annulus on the supersonic branch (the reduced
/// functional peaks at eta = a); H_C >= H_D leaves it subsonic (peak at
/// eta = R). Both at once is impossible for a slope-dominant H_sub.
ExistenceReport existence_report(const ModelConfig& config);

/// Sample the piecewise transonic solution on n_samples uniform radii plus a
/// duplicated breakpoint at r_s (subsonic-side row first). The potential is
/// normalized to phi(R) = 0 and integrates the branch speed, so it is
/// continuous at the shock and lies above the supersonic-branch potential on
/// [a, r_s).
ShockSolution assemble_solution(const ModelConfig& config, std::size_t n_samples);

}  // namespace transonic
