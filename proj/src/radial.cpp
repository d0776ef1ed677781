#include "transonic/radial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace transonic {

namespace {

constexpr double kBranchTol = 1e-13;     // fixed kernel tolerance for speed inversion
constexpr double kBracketEps = 1e-9;     // stand-off from the sonic and vacuum speeds
constexpr double kDomainSlack = 1e-9;    // slack for r-range checks used by FD probes

void validate_radius(double r, const ModelConfig& config, const char* who) {
  if (!(r >= config.a - kDomainSlack) || !(r <= config.R + kDomainSlack)) {
    std::ostringstream msg;
    msg << who << ": r=" << r << " outside [" << config.a << ", " << config.R << "]";
    throw std::domain_error(msg.str());
  }
}

}  // namespace

const char* to_string(FlowClass c) {
  switch (c) {
    case FlowClass::Transonic: return "Transonic";
    case FlowClass::SubsonicOnly: return "SubsonicOnly";
    case FlowClass::SupersonicOnly: return "SupersonicOnly";
  }
  return "?";
}

ModelConfig make_config(double gamma, double c_star_sq, double m0, double a, double R,
                        double v_a, double v_0) {
  if (!(a > 0.0) || !(a < R)) throw std::domain_error("make_config: need 0 < a < R");
  ModelConfig config;
  config.params = make_parameters(gamma, c_star_sq, m0);
  config.a = a;
  config.R = R;
  config.v_a = v_a;
  config.v_0 = v_0;

  const double cs_sq = config.params.c_star_sq;
  if (!(v_a > 0.0) || !(v_a * v_a < cs_sq))
    throw RegimeError("make_config: v_a must be positive and subsonic");
  if (!(v_0 * v_0 > cs_sq))
    throw RegimeError("make_config: v_0 must be supersonic");
  if (!(v_0 * v_0 < config.params.q_hat0_sq))
    throw RegimeError("make_config: v_0 must stay below the vacuum speed");

  config.k0 = entropy_from_state(v_0, R, config.params);
  config.k_a = entropy_from_state(v_a, a, config.params);

  if (!(config.k0 < k_max_at_radius(a, config.params)))
    throw PersistenceError("make_config: supersonic branch chokes before r = a (k0 >= k_max(a))");
  return config;
}

ModelConfig make_subsonic_only_config(double gamma, double c_star_sq, double m0, double a,
                                      double R, double v_a) {
  if (!(a > 0.0) || !(a < R)) throw std::domain_error("make_subsonic_only_config: need 0 < a < R");
  ModelConfig config;
  config.params = make_parameters(gamma, c_star_sq, m0);
  config.a = a;
  config.R = R;
  config.v_a = v_a;
  config.v_0 = 0.0;
  config.mode = RunMode::SubsonicOnly;

  if (!(v_a > 0.0) || !(v_a * v_a < config.params.c_star_sq))
    throw RegimeError("make_subsonic_only_config: v_a must be positive and subsonic");
  config.k_a = entropy_from_state(v_a, a, config.params);
  config.k0 = config.k_a;
  return config;
}

double branch_entropy(Branch branch, const ModelConfig& config) {
  return branch == Branch::Sup ? config.k0 : config.k_a;
}

double branch_speed(Branch branch, double r, const ModelConfig& config) {
  validate_radius(r, config, "branch_speed");
  const GasParameters& gas = config.params;
  const double k = branch_entropy(branch, config);
  if (k >= k_max_at_radius(r, gas)) {
    std::ostringstream msg;
    msg << "branch_speed: k=" << k << " >= k_max(" << r << ") -- sonic choking";
    throw NoRootError(msg.str());
  }

  const double c_star = std::sqrt(gas.c_star_sq);
  const auto f = [&](double v) { return entropy_from_state(v, r, gas) - k; };

  Bracket bracket;
  bracket.tol_x = kBranchTol;
  bracket.max_iter = 400;
  if (branch == Branch::Sup) {
    bracket.lo = c_star * (1.0 + kBracketEps);
    bracket.hi = std::sqrt(gas.q_hat0_sq) * (1.0 - kBracketEps);
  } else {
    bracket.lo = c_star * kBracketEps;
    bracket.hi = c_star * (1.0 - kBracketEps);
    // The entropy curve rises from 0 at V=0, so f(lo) < 0 once lo is small
    // enough; walk the endpoint toward 0 if the first guess is not.
    while (f(bracket.lo) > 0.0 && bracket.lo > 1e-300) bracket.lo *= 0.5;
  }
  return find_root(f, bracket);
}

double momentum_flux_H(Branch branch, double r, const ModelConfig& config) {
  const GasParameters& gas = config.params;
  const double v = branch_speed(branch, r, config);
  return gas.m0 * (gas.gamma + 1.0) / (2.0 * gas.gamma) * (gas.c_star_sq / v + v);
}

RhResiduals rh_residuals(double r_s, const ModelConfig& config) {
  const GasParameters& gas = config.params;
  const RadialState s1 =
      state_from_flux(branch_speed(Branch::Sup, r_s, config), config.k0, r_s, gas);
  const RadialState s2 =
      state_from_flux(branch_speed(Branch::Sub, r_s, config), config.k_a, r_s, gas);
  RhResiduals res;
  res.mass = s1.rho * s1.speed - s2.rho * s2.speed;
  res.momentum = (s1.rho * s1.speed * s1.speed + s1.p) - (s2.rho * s2.speed * s2.speed + s2.p);
  res.energy = (0.5 * s1.speed * s1.speed + enthalpy(s1, gas)) -
               (0.5 * s2.speed * s2.speed + enthalpy(s2, gas));
  res.prandtl = s1.speed * s2.speed - gas.c_star_sq;
  return res;
}

ShockSolution locate_shock(const ModelConfig& config) {
  const auto g = [&](double r) {
    return momentum_flux_H(Branch::Sup, r, config) - momentum_flux_H(Branch::Sub, r, config);
  };
  const double ga = g(config.a);
  const double gR = g(config.R);
  if (ga * gR > 0.0) throw NoCrossingError("locate_shock: H-curves do not cross");

  Bracket bracket;
  bracket.lo = config.a;
  bracket.hi = config.R;
  bracket.tol_x = config.numerics.root_tol;
  bracket.max_iter = 400;
  ShockSolution sol;
  sol.r_s = find_root(g, bracket);
  sol.state1 = state_from_flux(branch_speed(Branch::Sup, sol.r_s, config), config.k0, sol.r_s,
                               config.params);
  sol.state2 = state_from_flux(branch_speed(Branch::Sub, sol.r_s, config), config.k_a, sol.r_s,
                               config.params);
  sol.residuals = rh_residuals(sol.r_s, config);
  return sol;
}

ExistenceReport existence_report(const ModelConfig& config) {
  const GasParameters& gas = config.params;
  ExistenceReport rep;
  rep.k0 = config.k0;
  rep.k_a = config.k_a;
  rep.k_max_a = k_max_at_radius(config.a, gas);
  rep.nu = std::sqrt(gas.c_star_sq * (gas.gamma - 1.0) / (gas.gamma + 1.0));
  rep.h_a = momentum_flux_H(Branch::Sub, config.a, config);
  rep.h_b = momentum_flux_H(Branch::Sup, config.a, config);
  rep.h_c = momentum_flux_H(Branch::Sup, config.R, config);
  rep.h_d = momentum_flux_H(Branch::Sub, config.R, config);
  rep.entropy_ordering_ok = config.k0 < config.k_a && config.k_a < rep.k_max_a;
  rep.v_a_above_nu = config.v_a > rep.nu;

  if (config.mode == RunMode::SubsonicOnly) {
    rep.classification = FlowClass::SubsonicOnly;
    return rep;
  }
  const bool crosses_at_R = rep.h_d > rep.h_c;  // subsonic curve on top at R
  const bool crosses_at_a = rep.h_b > rep.h_a;  // supersonic curve on top at a
  if (crosses_at_R && crosses_at_a) {
    rep.classification = FlowClass::Transonic;
  } else if (!crosses_at_a && crosses_at_R) {
    rep.classification = FlowClass::SupersonicOnly;
  } else if (!crosses_at_R && crosses_at_a) {
    rep.classification = FlowClass::SubsonicOnly;
  } else {
    // H_sub grows strictly faster than H_sup, so it cannot start above at a
    // and finish below at R.
    throw std::logic_error("existence_report: impossible H-curve sign pattern");
  }
  return rep;
}

ShockSolution assemble_solution(const ModelConfig& config, std::size_t n_samples) {
  if (n_samples < 2) throw std::invalid_argument("assemble_solution: need n_samples >= 2");
  ShockSolution sol = locate_shock(config);
  const GasParameters& gas = config.params;

  std::vector<double> grid;
  grid.reserve(n_samples + 2);
  const double step = (config.R - config.a) / static_cast<double>(n_samples - 1);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double r = (i + 1 == n_samples) ? config.R : config.a + step * static_cast<double>(i);
    if (r != sol.r_s) grid.push_back(r);
  }
  grid.push_back(sol.r_s);
  grid.push_back(sol.r_s);
  std::sort(grid.begin(), grid.end());

  // Rows [0 .. shock_lo] carry the subsonic branch (shock_lo is the sub-side
  // limit row), rows [shock_lo+1 ..] the supersonic branch.
  std::size_t shock_lo = 0;
  while (grid[shock_lo] != sol.r_s) ++shock_lo;

  // Potential phi with phi(R) = 0, integrating the branch speed from the
  // outside in. The duplicated breakpoint is a zero-width segment, so the
  // running value carries across the shock and phi stays continuous.
  const auto speed_on = [&config](Branch b) {
    return [&config, b](double r) { return branch_speed(b, r, config); };
  };

  sol.profiles.assign(grid.size(), ProfileRow{});
  double phi = 0.0;
  for (std::size_t idx = grid.size(); idx-- > 0;) {
    const double r = grid[idx];
    const Branch b = idx <= shock_lo ? Branch::Sub : Branch::Sup;

    ProfileRow& row = sol.profiles[idx];
    row.r = r;
    row.k = branch_entropy(b, config);
    row.speed = branch_speed(b, r, config);
    const RadialState st = state_from_flux(row.speed, row.k, r, gas);
    row.rho = st.rho;
    row.p = st.p;

    if (idx + 1 < grid.size() && grid[idx + 1] > r) {
      const Branch seg = idx >= shock_lo + 1 ? Branch::Sup : Branch::Sub;
      phi -= integrate(speed_on(seg), r, grid[idx + 1], config.numerics.quad);
    }
    row.phi = phi;
  }
  return sol;
}

}  // namespace transonic
