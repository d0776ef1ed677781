#pragma once

#include <stdexcept>

namespace transonic {

// Dimensionless thermodynamic relations for a polytropic gas (p = k rho^gamma)
// under the Bernoulli law 0.5 V^2 + c^2/(gamma-1) = 0.5 q_hat0_sq. All speeds
// are stored positive; the physical radial velocity is v = -V (inward flow).

struct GasParameters {
  double gamma;       // adiabatic exponent, > 1
  double q_hat0_sq;   // Bernoulli constant (squared limit speed)
  double c_star_sq;   // critical sound speed squared, = (g-1)/(g+1) q_hat0_sq
  double m0;          // mass flux per radian, rho*V*r on any branch
};

/// Build parameters from (gamma, c*^2, M0); q_hat0_sq is derived as
/// c*^2 (gamma+1)/(gamma-1). Throws std::domain_error on nonpositive input
/// or gamma <= 1.
GasParameters make_parameters(double gamma, double c_star_sq, double m0);

enum class Regime { Subsonic, Sonic, Supersonic };

// One point of the flow. Off-branch states (nonzero bernoulli_residual) are
// representable; branch membership is a diagnostic, not an invariant.
struct RadialState {
  double r;
  double speed;               // V = |v|
  double velocity;            // v = -V
  double rho;
  double p;                   // k rho^gamma
  double c_sq;                // gamma k rho^(gamma-1)
  double k;                   // entropy constant
  double bernoulli_residual;  // 0.5 V^2 + c^2/(g-1) - 0.5 q_hat0_sq
};

/// rho = ((1/k) (g-1)/(2g) (q_hat0_sq - V^2))^(1/(g-1)). Vacuum speed
/// V = sqrt(q_hat0_sq) returns exactly 0; faster speeds are a domain error.
double density_from_speed(double speed, double k, const GasParameters& gas);

/// Full state with the density taken from flux conservation, rho = M0/(r V).
/// The Bernoulli residual is recorded as a diagnostic; it vanishes only when
/// (V, k, r) lies on a branch solution.
RadialState state_from_flux(double speed, double k, double r, const GasParameters& gas);

/// k = (g-1)/(2g) (r V / M0)^(g-1) (q_hat0_sq - V^2); the entropy constant a
/// branch passing through (V, r) must carry.
double entropy_from_state(double speed, double r, const GasParameters& gas);

/// Maximum of entropy_from_state over V at fixed r, attained at V = c*:
/// (1/g) (r/M0)^(g-1) c*^(g+1).
double k_max_at_radius(double r, const GasParameters& gas);

/// Subsonic / Sonic / Supersonic by comparing V^2 with c*^2
/// (relative tolerance 1e-12 for the sonic band).
Regime classify_regime(double speed, const GasParameters& gas);

/// p = (g-1)/(2g) (M0/r) (q_hat0_sq - V^2)/V, the branch pressure written in
/// terms of the speed alone; decreasing in V, zero at the vacuum speed.
double pressure_from_speed(double speed, double r, const GasParameters& gas);

/// c^2 = (g-1)/2 (q_hat0_sq - V^2), the Bernoulli sound speed at speed V.
double sound_speed_sq_from_speed(double speed, const GasParameters& gas);

/// Enthalpy c^2/(gamma-1) of a state.
double enthalpy(const RadialState& state, const GasParameters& gas);

}  // namespace transonic
