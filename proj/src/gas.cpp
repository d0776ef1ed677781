#include "transonic/gas.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace transonic {

GasParameters make_parameters(double gamma, double c_star_sq, double m0) {
  if (!(gamma > 1.0)) throw std::domain_error("make_parameters: gamma must exceed 1");
  if (!(c_star_sq > 0.0)) throw std::domain_error("make_parameters: c_star_sq must be positive");
  if (!(m0 > 0.0)) throw std::domain_error("make_parameters: m0 must be positive");
  GasParameters gas;
  gas.gamma = gamma;
  gas.c_star_sq = c_star_sq;
  gas.m0 = m0;
  gas.q_hat0_sq = c_star_sq * (gamma + 1.0) / (gamma - 1.0);
  return gas;
}

// Slack of a few ulps on q_hat0_sq so the vacuum speed sqrt(q_hat0_sq),
// whose square rounds slightly past q_hat0_sq, still counts as the boundary.
static double speed_deficit(double speed, const GasParameters& gas, const char* who) {
  const double deficit = gas.q_hat0_sq - speed * speed;
  const double slack = 4.0 * std::numeric_limits<double>::epsilon() * gas.q_hat0_sq;
  if (deficit < -slack)
    throw std::domain_error(std::string(who) + ": speed exceeds the vacuum speed");
  return deficit > 0.0 ? deficit : 0.0;
}

double density_from_speed(double speed, double k, const GasParameters& gas) {
  if (!(k > 0.0)) throw std::domain_error("density_from_speed: k must be positive");
  if (!(speed >= 0.0)) throw std::domain_error("density_from_speed: speed must be nonnegative");
  const double deficit = speed_deficit(speed, gas, "density_from_speed");
  if (deficit == 0.0) return 0.0;
  const double g = gas.gamma;
  return std::pow((g - 1.0) / (2.0 * g * k) * deficit, 1.0 / (g - 1.0));
}

RadialState state_from_flux(double speed, double k, double r, const GasParameters& gas) {
  if (!(speed > 0.0)) throw std::domain_error("state_from_flux: speed must be positive");
  if (!(r > 0.0)) throw std::domain_error("state_from_flux: r must be positive");
  if (!(k > 0.0)) throw std::domain_error("state_from_flux: k must be positive");
  const double g = gas.gamma;
  RadialState s;
  s.r = r;
  s.speed = speed;
  s.velocity = -speed;
  s.rho = gas.m0 / (r * speed);
  s.p = k * std::pow(s.rho, g);
  s.c_sq = g * k * std::pow(s.rho, g - 1.0);
  s.k = k;
  s.bernoulli_residual = 0.5 * speed * speed + s.c_sq / (g - 1.0) - 0.5 * gas.q_hat0_sq;
  return s;
}

double entropy_from_state(double speed, double r, const GasParameters& gas) {
  if (!(speed > 0.0)) throw std::domain_error("entropy_from_state: speed must be positive");
  if (!(r > 0.0)) throw std::domain_error("entropy_from_state: r must be positive");
  const double deficit = gas.q_hat0_sq - speed * speed;
  if (!(deficit > 0.0)) throw std::domain_error("entropy_from_state: speed must be below the vacuum speed");
  const double g = gas.gamma;
  return (g - 1.0) / (2.0 * g) * std::pow(r * speed / gas.m0, g - 1.0) * deficit;
}

double k_max_at_radius(double r, const GasParameters& gas) {
  if (!(r > 0.0)) throw std::domain_error("k_max_at_radius: r must be positive");
  const double g = gas.gamma;
  return (1.0 / g) * std::pow(r / gas.m0, g - 1.0) * std::pow(gas.c_star_sq, 0.5 * (g + 1.0));
}

Regime classify_regime(double speed, const GasParameters& gas) {
  if (!(speed >= 0.0)) throw std::domain_error("classify_regime: speed must be nonnegative");
  const double v_sq = speed * speed;
  if (std::abs(v_sq - gas.c_star_sq) <= 1e-12 * gas.c_star_sq) return Regime::Sonic;
  return v_sq < gas.c_star_sq ? Regime::Subsonic : Regime::Supersonic;
}

double pressure_from_speed(double speed, double r, const GasParameters& gas) {
  if (!(speed > 0.0)) throw std::domain_error("pressure_from_speed: speed must be positive");
  if (!(r > 0.0)) throw std::domain_error("pressure_from_speed: r must be positive");
  const double deficit = speed_deficit(speed, gas, "pressure_from_speed");
  const double g = gas.gamma;
  return (g - 1.0) / (2.0 * g) * (gas.m0 / r) * deficit / speed;
}

double sound_speed_sq_from_speed(double speed, const GasParameters& gas) {
  return 0.5 * (gas.gamma - 1.0) * (gas.q_hat0_sq - speed * speed);
}

double enthalpy(const RadialState& state, const GasParameters& gas) {
  return state.c_sq / (gas.gamma - 1.0);
}

}  // namespace transonic
