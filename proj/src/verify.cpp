#include "transonic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "transonic/variational.hpp"

namespace transonic {

namespace {

std::vector<double> interior_radii(const ModelConfig& config, std::size_t n, double margin) {
  std::vector<double> out;
  out.reserve(n);
  const double lo = config.a + margin;
  const double hi = config.R - margin;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  return out;
}

CheckResult flux_conservation(const ModelConfig& config) {
  CheckResult c{"flux-conservation"};
  double worst = 0.0;
  const auto radii = interior_radii(config, 1000, 0.0);
  for (const Branch b : {Branch::Sub, Branch::Sup}) {
    const double k = branch_entropy(b, config);
    for (const double r : radii) {
      const double v = branch_speed(b, r, config);
      const double rho = density_from_speed(v, k, config.params);
      worst = std::max(worst, std::abs(rho * v * r / config.params.m0 - 1.0));
    }
  }
  c.measure = worst;
  c.passed = worst < 1e-10;
  c.detail = "max |rho V r / M0 - 1| over 1000 radii, both branches";
  return c;
}

CheckResult bernoulli_residual(const ModelConfig& config) {
  CheckResult c{"bernoulli-residual"};
  double worst = 0.0;
  for (const Branch b : {Branch::Sub, Branch::Sup}) {
    const double k = branch_entropy(b, config);
    for (const double r : interior_radii(config, 200, 0.0)) {
      const RadialState s = state_from_flux(branch_speed(b, r, config), k, r, config.params);
      worst = std::max(worst, std::abs(s.bernoulli_residual));
    }
  }
  c.measure = worst;
  c.passed = worst < 1e-12;
  c.detail = "max on-branch |0.5 V^2 + c^2/(g-1) - 0.5 q0^2|";
  return c;
}

CheckResult h_slope(const ModelConfig& config) {
  CheckResult c{"h-slope"};
  const double h = 1e-5;
  double worst = 0.0;
  for (const Branch b : {Branch::Sub, Branch::Sup}) {
    for (const double r : interior_radii(config, 100, 2.0 * h)) {
      const double slope =
          central_diff([&](double s) { return momentum_flux_H(b, s, config); }, r, h);
      const double p = pressure_from_speed(branch_speed(b, r, config), r, config.params);
      worst = std::max(worst, std::abs(slope / p - 1.0));
    }
  }
  c.measure = worst;
  c.passed = worst < 1e-6;
  c.detail = "max rel |dH/dr / p - 1|, both branches";
  return c;
}

CheckResult slope_dominance(const ModelConfig& config) {
  CheckResult c{"h-slope-dominance"};
  const double h = 1e-5;
  double min_gap = std::numeric_limits<double>::infinity();
  for (const double r : interior_radii(config, 100, 2.0 * h)) {
    const double sub =
        central_diff([&](double s) { return momentum_flux_H(Branch::Sub, s, config); }, r, h);
    const double sup =
        central_diff([&](double s) { return momentum_flux_H(Branch::Sup, s, config); }, r, h);
    min_gap = std::min(min_gap, sub - sup);
  }
  c.measure = min_gap;
  c.passed = min_gap > 0.0;
  c.detail = "min (dH_sub/dr - dH_sup/dr) over sampled radii";
  return c;
}

CheckResult branch_monotonicity(const ModelConfig& config) {
  CheckResult c{"branch-monotonicity"};
  const auto radii = interior_radii(config, 400, 0.0);
  double worst = -std::numeric_limits<double>::infinity();
  bool ok = true;
  for (std::size_t i = 1; i < radii.size(); ++i) {
    const double dsub = branch_speed(Branch::Sub, radii[i], config) -
                        branch_speed(Branch::Sub, radii[i - 1], config);
    const double dsup = branch_speed(Branch::Sup, radii[i], config) -
                        branch_speed(Branch::Sup, radii[i - 1], config);
    ok = ok && dsub < 0.0 && dsup > 0.0;
    worst = std::max(worst, dsub);
  }
  c.measure = worst;
  c.passed = ok;
  c.detail = "V_sub decreasing and V_sup increasing on a 400-point grid";
  return c;
}

CheckResult entropy_argmax(const ModelConfig& config) {
  CheckResult c{"entropy-argmax"};
  std::mt19937 rng(20240811u);
  std::uniform_real_distribution<double> pick(config.a, config.R);
  const GasParameters& gas = config.params;
  const double c_star = std::sqrt(gas.c_star_sq);
  const double q0 = std::sqrt(gas.q_hat0_sq);
  const std::size_t grid_n = 2001;
  const double dv = q0 / static_cast<double>(grid_n);
  double worst = 0.0;
  bool ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    const double r = pick(rng);
    double best_v = dv;
    double best_k = -1.0;
    for (std::size_t i = 1; i < grid_n; ++i) {
      const double v = dv * static_cast<double>(i);
      const double k = entropy_from_state(v, r, gas);
      if (k > best_k) {
        best_k = k;
        best_v = v;
      }
    }
    ok = ok && std::abs(best_v - c_star) <= dv;
    const double rel = std::abs(entropy_from_state(c_star, r, gas) / k_max_at_radius(r, gas) - 1.0);
    worst = std::max(worst, rel);
    ok = ok && rel < 1e-12;
  }
  c.measure = worst;
  c.passed = ok;
  c.detail = "grid argmax of k(V, r) at V = c*, value k_max, 50 random radii";
  return c;
}

CheckResult pressure_routes(const ModelConfig& config) {
  CheckResult c{"pressure-routes"};
  const GasParameters& gas = config.params;
  const double q0 = std::sqrt(gas.q_hat0_sq);
  double worst = 0.0;
  for (const double r : interior_radii(config, 20, 0.0)) {
    for (int i = 1; i <= 19; ++i) {
      const double v = q0 * static_cast<double>(i) / 20.0;
      const double direct = pressure_from_speed(v, r, gas);
      const double k = entropy_from_state(v, r, gas);
      const double via_density = k * std::pow(gas.m0 / (r * v), gas.gamma);
      worst = std::max(worst, std::abs(direct / via_density - 1.0));
    }
  }
  c.measure = worst;
  c.passed = worst < 1e-12;
  c.detail = "pressure_from_speed vs k rho^gamma with k from the entropy curve";
  return c;
}

CheckResult pressure_monotone(const ModelConfig& config) {
  CheckResult c{"pressure-monotone"};
  const GasParameters& gas = config.params;
  const double q0 = std::sqrt(gas.q_hat0_sq);
  double worst = -std::numeric_limits<double>::infinity();
  for (const double r : {config.a, 0.5 * (config.a + config.R), config.R}) {
    for (int i = 1; i < 40; ++i) {
      const double v = q0 * static_cast<double>(i) / 40.0;
      const double slope =
          central_diff([&](double s) { return pressure_from_speed(s, r, gas); }, v, 1e-6);
      worst = std::max(worst, slope);
    }
  }
  c.measure = worst;
  c.passed = worst < 0.0;
  c.detail = "finite-difference dp/dV < 0 on a speed grid";
  return c;
}

CheckResult gamma3_closed_form(const ModelConfig& config) {
  CheckResult c{"gamma3-closed-form"};
  if (config.params.gamma != 3.0) {
    c.applicable = false;
    c.detail = "requires gamma = 3";
    return c;
  }
  const GasParameters& gas = config.params;
  std::mt19937 rng(77u);
  std::uniform_real_distribution<double> pick(config.a, config.R);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double r = pick(rng);
    for (const Branch b : {Branch::Sub, Branch::Sup}) {
      const double k = branch_entropy(b, config);
      const double disc = gas.q_hat0_sq * gas.q_hat0_sq -
                          (8.0 * k * gas.gamma / (gas.gamma - 1.0)) *
                              std::pow(gas.m0 / r, gas.gamma - 1.0);
      const double root = std::sqrt(disc);
      const double v_sq = b == Branch::Sup ? 0.5 * (gas.q_hat0_sq + root)
                                           : 0.5 * (gas.q_hat0_sq - root);
      worst = std::max(worst, std::abs(branch_speed(b, r, config) - std::sqrt(v_sq)));
    }
  }
  c.measure = worst;
  c.passed = worst < 1e-10;
  c.detail = "root finder vs quadratic closed form, 100 random radii";
  return c;
}

CheckResult derivative_consistency(const ModelConfig& config) {
  CheckResult c{"derivative-consistency"};
  // Difference quotients amplify quadrature error by 1/h; evaluate J under a
  // tighter spec than the value-level default.
  ModelConfig tight = config;
  tight.numerics.quad.abs_tol = std::min(config.numerics.quad.abs_tol, 1e-12);
  tight.numerics.quad.rel_tol = std::min(config.numerics.quad.rel_tol, 1e-12);
  tight.numerics.quad.max_depth = std::max(config.numerics.quad.max_depth, 48);
  const double h = 1e-3;
  double worst = 0.0;
  for (const double eta : interior_radii(config, 20, 0.05 * (config.R - config.a))) {
    const double fd = central_diff([&](double e) { return reduced_J(e, tight); }, eta, h);
    worst = std::max(worst, std::abs(fd - J_prime(eta, config)));
  }
  c.measure = worst;
  c.passed = worst < 1e-6;
  c.detail = "max |central_diff(J) - J'| at 20 interior points";
  return c;
}

CheckResult second_variation_positive(const ModelConfig& config, double eta) {
  CheckResult c{"second-variation-positive"};
  std::mt19937 rng(4242u);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  double min_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10; ++i) {
    const double c0 = coeff(rng);
    const double c1 = coeff(rng);
    const double c2 = coeff(rng);
    const double c3 = coeff(rng);
    const auto w_r = [&](double r) { return c0 + c1 * std::sin(c2 * r + c3); };
    min_value = std::min(min_value, second_variation(w_r, eta, config));
  }
  c.measure = min_value;
  c.passed = min_value > 0.0;
  std::ostringstream detail;
  detail << "min I''/2pi over 10 random slope profiles at eta=" << eta;
  c.detail = detail.str();
  return c;
}

CheckResult shock_residual(const ModelConfig& config, const ShockSolution& sol) {
  CheckResult c{"shock-residual"};
  const double g = momentum_flux_H(Branch::Sup, sol.r_s, config) -
                   momentum_flux_H(Branch::Sub, sol.r_s, config);
  c.measure = std::abs(g);
  c.passed = c.measure < 1e-11;
  c.detail = "|H_sup - H_sub| at the located shock";
  return c;
}

CheckResult rh_check(const ModelConfig& config, const ShockSolution& sol) {
  CheckResult c{"rh-residuals"};
  const RhResiduals& res = sol.residuals;
  c.measure = std::max({std::abs(res.mass), std::abs(res.momentum), std::abs(res.energy),
                        std::abs(res.prandtl)});
  c.passed = c.measure < 1e-9;
  c.detail = "max |mass, momentum, energy, prandtl| at r_s";
  (void)config;
  return c;
}

CheckResult shock_structure(const ModelConfig& config, const ShockSolution& sol) {
  CheckResult c{"shock-structure"};
  const double g = config.params.gamma;
  const double ratio = sol.state2.rho / sol.state1.rho;
  const double lo = (g - 1.0) / (g + 1.0);
  const double hi = (g + 1.0) / (g - 1.0);
  const double c_star = std::sqrt(config.params.c_star_sq);
  const bool ok = sol.r_s > config.a && sol.r_s < config.R && sol.state2.speed < c_star &&
                  c_star < sol.state1.speed && config.k_a > config.k0 && ratio > lo && ratio < hi;
  c.measure = ratio;
  c.passed = ok;
  c.detail = "a < r_s < R, V2 < c* < V1, k_a > k0, compression ratio in bounds";
  return c;
}

CheckResult jump_condition(const ModelConfig& config, const ShockSolution& sol) {
  CheckResult c{"jump-condition"};
  const RadialState& s1 = sol.state1;
  const RadialState& s2 = sol.state2;
  c.measure = std::abs(s2.p + s2.rho * s2.speed * s2.speed -
                       (s1.p + s2.rho * s2.speed * s1.speed));
  c.passed = c.measure < 1e-9;
  c.detail = "|p + rho phi_n^2 - p_sup - rho phi_n phi_n_sup| at r_s";
  (void)config;
  return c;
}

CheckResult obstacle_ordering(const ModelConfig& config, const ShockSolution& sol) {
  CheckResult c{"obstacle-ordering"};
  // Independent supersonic-branch potential, integrated on its own all the
  // way down to r = a.
  double phi_sup = 0.0;
  double prev_r = config.R;
  double min_gap = std::numeric_limits<double>::infinity();
  double gap_at_shock = 0.0;
  bool ok = true;
  for (std::size_t idx = sol.profiles.size(); idx-- > 0;) {
    const ProfileRow& row = sol.profiles[idx];
    if (row.r < prev_r) {
      phi_sup -= integrate([&](double s) { return branch_speed(Branch::Sup, s, config); }, row.r,
                           prev_r, config.numerics.quad);
      prev_r = row.r;
    }
    if (row.r > sol.r_s) continue;
    const double gap = row.phi - phi_sup;
    if (row.r == sol.r_s) {
      gap_at_shock = std::abs(gap);
      ok = ok && gap_at_shock < 1e-10;
    } else {
      min_gap = std::min(min_gap, gap);
      ok = ok && gap > 0.0;
    }
  }
  c.measure = min_gap;
  c.passed = ok;
  std::ostringstream detail;
  detail << "phi >= phi_sup on [a, r_s], equality at r_s (|gap|=" << gap_at_shock << ")";
  c.detail = detail.str();
  return c;
}

CheckResult jprime_sign_pattern(const ModelConfig& config, double r_s) {
  CheckResult c{"jprime-sign-pattern"};
  bool ok = true;
  double worst = std::numeric_limits<double>::infinity();
  for (const double eta : interior_radii(config, 100, 0.0)) {
    if (std::abs(eta - r_s) < 1e-3) continue;
    const double signed_value = J_prime(eta, config) * (r_s > eta ? 1.0 : -1.0);
    worst = std::min(worst, signed_value);
    ok = ok && signed_value > 0.0;
  }
  c.measure = worst;
  c.passed = ok;
  c.detail = "J' > 0 below r_s and < 0 above, 100 sampled points";
  return c;
}

CheckResult saddle_location(const ModelConfig& config, const SaddleReport& saddle) {
  CheckResult c{"saddle-location"};
  switch (saddle.classification) {
    case FlowClass::Transonic: {
      c.measure = std::abs(saddle.eta_star - saddle.r_s_exact);
      c.passed = c.measure < 1e-5 && saddle.j_prime_at_a > 0.0 && saddle.j_prime_at_R < 0.0;
      c.detail = "|eta* - r_s| < 1e-5 with J'(a+) > 0 > J'(R-)";
      break;
    }
    case FlowClass::SupersonicOnly:
      c.measure = saddle.eta_star - config.a;
      c.passed = saddle.eta_star == config.a;
      c.detail = "maximum pinned at eta = a";
      break;
    case FlowClass::SubsonicOnly:
      c.measure = config.R - saddle.eta_star;
      c.passed = saddle.eta_star == config.R;
      c.detail = "maximum pinned at eta = R";
      break;
  }
  return c;
}

CheckResult j_dominance(const ModelConfig& config, const SaddleReport& saddle,
                        std::size_t sweep_n) {
  CheckResult c{"j-dominance"};
  const SweepResult curve = j_curve(config, sweep_n);
  double max_value = -std::numeric_limits<double>::infinity();
  for (const auto& [eta, value] : curve.samples) max_value = std::max(max_value, value);
  double reference;
  if (saddle.classification == FlowClass::Transonic)
    reference = reduced_J(saddle.eta_star, config);
  else
    reference = saddle.classification == FlowClass::SupersonicOnly ? curve.samples.front().second
                                                                   : curve.samples.back().second;
  c.measure = max_value - reference;
  c.passed = c.measure <= 1e-9;
  c.detail = "sweep max of J does not exceed J(eta*)";
  return c;
}

CheckResult i_scan_minimum(const SaddleReport& saddle) {
  CheckResult c{"i-scan-min-at-zero"};
  c.passed = saddle.i_min_at_zero;
  c.measure = saddle.x_bound;
  c.detail = "I(x) scan at eta* attains its minimum at x = 0";
  return c;
}

CheckResult not_applicable(std::string name, std::string why) {
  CheckResult c{std::move(name)};
  c.applicable = false;
  c.detail = std::move(why);
  return c;
}

}  // namespace

std::vector<CheckResult> run_verification(const ModelConfig& config, std::size_t sweep_n) {
  std::vector<CheckResult> out;
  out.push_back(flux_conservation(config));
  out.push_back(bernoulli_residual(config));
  out.push_back(h_slope(config));
  out.push_back(slope_dominance(config));
  out.push_back(branch_monotonicity(config));
  out.push_back(entropy_argmax(config));
  out.push_back(pressure_routes(config));
  out.push_back(pressure_monotone(config));
  out.push_back(gamma3_closed_form(config));
  out.push_back(derivative_consistency(config));

  const SaddleReport saddle = saddle_report(config, sweep_n);
  const bool transonic = saddle.classification == FlowClass::Transonic;

  if (transonic) {
    const ShockSolution sol = assemble_solution(config, 501);
    out.push_back(shock_residual(config, sol));
    out.push_back(rh_check(config, sol));
    out.push_back(shock_structure(config, sol));
    out.push_back(jump_condition(config, sol));
    out.push_back(obstacle_ordering(config, sol));
    out.push_back(jprime_sign_pattern(config, sol.r_s));
  } else {
    const char* why = "needs an interior shock";
    out.push_back(not_applicable("shock-residual", why));
    out.push_back(not_applicable("rh-residuals", why));
    out.push_back(not_applicable("shock-structure", why));
    out.push_back(not_applicable("jump-condition", why));
    out.push_back(not_applicable("obstacle-ordering", why));
    out.push_back(not_applicable("jprime-sign-pattern", why));
  }

  out.push_back(saddle_location(config, saddle));
  out.push_back(j_dominance(config, saddle, sweep_n));
  if (saddle.eta_star > config.a)
    out.push_back(i_scan_minimum(saddle));
  else
    out.push_back(not_applicable("i-scan-min-at-zero", "empty subsonic region at eta* = a"));
  out.push_back(second_variation_positive(
      config, saddle.eta_star > config.a ? saddle.eta_star : 0.5 * (config.a + config.R)));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& c) { return !c.applicable || c.passed; });
}

}  // namespace transonic
