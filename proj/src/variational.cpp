#include "transonic/variational.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace transonic {

namespace {

// gamma^(g/(g-1)) k_a^(1/(g-1)), the factor the functional puts in front of
// every pressure and boundary term.
double functional_coefficient(const ModelConfig& config) {
  const double g = config.params.gamma;
  return std::pow(g, g / (g - 1.0)) * std::pow(config.k_a, 1.0 / (g - 1.0));
}

// The upstream continuation on [eta, R]: the supersonic branch, except in
// SubsonicOnly mode where the whole annulus carries the subsonic solution.
Branch upstream_branch(const ModelConfig& config) {
  return config.mode == RunMode::SubsonicOnly ? Branch::Sub : Branch::Sup;
}

double upstream_speed(double r, const ModelConfig& config) {
  return branch_speed(upstream_branch(config), r, config);
}

double upstream_pressure(double r, const ModelConfig& config) {
  const double v = upstream_speed(r, config);
  const double rho = config.params.m0 / (r * v);
  return config.k0 * std::pow(rho, config.params.gamma);
}

void validate_eta(double eta, const ModelConfig& config, const char* who) {
  if (!(eta >= config.a) || !(eta <= config.R)) {
    std::ostringstream msg;
    msg << who << ": eta=" << eta << " outside [" << config.a << ", " << config.R << "]";
    throw std::domain_error(msg.str());
  }
}

// Uniform admissibility bounds for the perturbed subsonic speed on [a, eta]:
// the branch speed decreases in r, so its extremes sit at the interval ends.
struct PerturbationBounds {
  double pos;  // largest x with max V + x (eta - a) < c*
  double neg;  // largest |x| with min V - |x| (eta - a) > 0
};

PerturbationBounds perturbation_bounds(double eta, const ModelConfig& config) {
  const double span = eta - config.a;
  PerturbationBounds b{std::numeric_limits<double>::infinity(),
                       std::numeric_limits<double>::infinity()};
  if (span <= 0.0) return b;
  const double v_max = branch_speed(Branch::Sub, config.a, config);
  const double v_min = branch_speed(Branch::Sub, eta, config);
  b.pos = (std::sqrt(config.params.c_star_sq) - v_max) / span;
  b.neg = v_min / span;
  return b;
}

}  // namespace

double functional_I(const TrialProfile& trial, const ModelConfig& config) {
  validate_eta(trial.eta, config, "functional_I");
  if (trial.x != 0.0) {
    const PerturbationBounds b = perturbation_bounds(trial.eta, config);
    if (std::abs(trial.x) >= std::min(b.pos, b.neg)) {
      std::ostringstream msg;
      msg << "functional_I: perturbation x=" << trial.x
          << " drives the subsonic speed out of (0, c*) on [a, eta]";
      throw std::domain_error(msg.str());
    }
  }

  const GasParameters& gas = config.params;
  const double g = gas.gamma;
  const double coef = functional_coefficient(config);
  const QuadratureSpec& quad = config.numerics.quad;
  const double a = config.a;
  const double eta = trial.eta;
  const double x = trial.x;

  const auto sub_speed = [&](double r) {
    return branch_speed(Branch::Sub, r, config) + x * (r - a);
  };
  const auto sub_energy_density = [&](double r) {
    const double c_sq = sound_speed_sq_from_speed(sub_speed(r), gas);
    return -std::pow(c_sq, g / (g - 1.0)) * r;
  };
  const auto upstream_pressure_density = [&](double r) {
    return -coef * upstream_pressure(r, config) * r;
  };

  double value = 0.0;
  double boundary = 0.0;  // contributes coef * M0 * phi(a)
  if (eta > a) {
    value += integrate(sub_energy_density, a, eta, quad);
    boundary -= integrate(sub_speed, a, eta, quad);
  }
  if (eta < config.R) {
    value += integrate(upstream_pressure_density, eta, config.R, quad);
    boundary -= integrate([&](double r) { return upstream_speed(r, config); }, eta, config.R, quad);
  }
  return value + coef * gas.m0 * boundary;
}

double reduced_J(double eta, const ModelConfig& config) {
  return functional_I(TrialProfile{eta, 0.0}, config);
}

double J_prime(double eta, const ModelConfig& config) {
  validate_eta(eta, config, "J_prime");
  return functional_coefficient(config) *
         (momentum_flux_H(upstream_branch(config), eta, config) -
          momentum_flux_H(Branch::Sub, eta, config));
}

double second_variation(const std::function<double(double)>& w_r, double eta,
                        const ModelConfig& config) {
  validate_eta(eta, config, "second_variation");
  const GasParameters& gas = config.params;
  const double g = gas.gamma;
  const auto integrand = [&](double r) {
    const double v = branch_speed(Branch::Sub, r, config);
    const double c_sq = sound_speed_sq_from_speed(v, gas);
    const double w = w_r(r);
    return std::pow(c_sq, (2.0 - g) / (g - 1.0)) * w * w * (gas.c_star_sq - v * v) * r;
  };
  if (eta <= config.a) return 0.0;
  return 0.5 * g * (g + 1.0) * integrate(integrand, config.a, eta, config.numerics.quad);
}

double perturbation_scan_bound(double eta, const ModelConfig& config) {
  validate_eta(eta, config, "perturbation_scan_bound");
  if (eta <= config.a) return 0.0;
  const PerturbationBounds b = perturbation_bounds(eta, config);
  const double raw = std::min(b.pos, b.neg);
  return std::floor(raw * 0.99 * 100.0) / 100.0;
}

SweepResult j_curve(const ModelConfig& config, std::size_t n) {
  if (n < 2) throw std::invalid_argument("j_curve: need at least 2 samples");
  const GasParameters& gas = config.params;
  const double g = gas.gamma;
  const double coef = functional_coefficient(config);
  const QuadratureSpec& quad = config.numerics.quad;

  const auto sub_energy_density = [&](double r) {
    const double c_sq = sound_speed_sq_from_speed(branch_speed(Branch::Sub, r, config), gas);
    return -std::pow(c_sq, g / (g - 1.0)) * r;
  };
  const auto sub_speed = [&](double r) { return branch_speed(Branch::Sub, r, config); };
  const auto upstream_pressure_density = [&](double r) {
    return -coef * upstream_pressure(r, config) * r;
  };
  const auto up_speed = [&](double r) { return upstream_speed(r, config); };

  SweepResult out;
  out.samples.reserve(n);
  const double step = (config.R - config.a) / static_cast<double>(n - 1);

  // J(a): the subsonic region is empty.
  double value = integrate(upstream_pressure_density, config.a, config.R, quad) -
                 coef * gas.m0 * integrate(up_speed, config.a, config.R, quad);
  out.samples.emplace_back(config.a, value);

  // Per-segment absolute tolerance scaled by the segment fraction so the
  // accumulated error over the whole sweep stays within the configured
  // budget.
  QuadratureSpec seg_quad = quad;
  seg_quad.abs_tol = quad.abs_tol / static_cast<double>(n - 1);

  // Advancing eta by one segment moves [lo, hi] from the upstream terms into
  // the subsonic ones; everything else cancels.
  for (std::size_t i = 1; i < n; ++i) {
    const double lo = config.a + step * static_cast<double>(i - 1);
    const double hi = (i + 1 == n) ? config.R : config.a + step * static_cast<double>(i);
    value += integrate(sub_energy_density, lo, hi, seg_quad) -
             integrate(upstream_pressure_density, lo, hi, seg_quad) +
             coef * gas.m0 * (integrate(up_speed, lo, hi, seg_quad) -
                              integrate(sub_speed, lo, hi, seg_quad));
    out.samples.emplace_back(hi, value);
  }
  return out;
}

SweepResult i_curve(const ModelConfig& config, double eta, std::size_t n) {
  if (n < 2) throw std::invalid_argument("i_curve: need at least 2 samples");
  validate_eta(eta, config, "i_curve");
  const double bound = perturbation_scan_bound(eta, config);

  // The upstream terms do not depend on x; evaluate them once through the
  // unperturbed functional and add the x-dependent difference per sample.
  const double base = reduced_J(eta, config);

  const GasParameters& gas = config.params;
  const double g = gas.gamma;
  const double coef = functional_coefficient(config);
  const QuadratureSpec& quad = config.numerics.quad;

  SweepResult out;
  out.samples.reserve(n);
  // 2i/(n-1) - 1 is exactly 0 at the midpoint of an odd grid, keeping x = 0
  // on the scan.
  for (std::size_t i = 0; i < n; ++i) {
    const double x =
        bound * (2.0 * static_cast<double>(i) / static_cast<double>(n - 1) - 1.0);
    double value = base;
    if (x != 0.0 && eta > config.a) {
      const auto delta_density = [&](double r) {
        const double v0 = branch_speed(Branch::Sub, r, config);
        const double v1 = v0 + x * (r - config.a);
        const double c0 = sound_speed_sq_from_speed(v0, gas);
        const double c1 = sound_speed_sq_from_speed(v1, gas);
        return (std::pow(c0, g / (g - 1.0)) - std::pow(c1, g / (g - 1.0))) * r -
               coef * gas.m0 * x * (r - config.a);
      };
      value += integrate(delta_density, config.a, eta, quad);
    }
    out.samples.emplace_back(x, value);
  }
  return out;
}

SaddleReport saddle_report(const ModelConfig& config, std::size_t sweep_n) {
  if (sweep_n < 3) throw std::invalid_argument("saddle_report: need sweep_n >= 3");
  SaddleReport rep;
  const ExistenceReport existence = existence_report(config);
  rep.classification = existence.classification;
  rep.j_prime_at_a = J_prime(config.a, config);
  rep.j_prime_at_R = J_prime(config.R, config);
  rep.r_s_exact = std::numeric_limits<double>::quiet_NaN();

  switch (rep.classification) {
    case FlowClass::SupersonicOnly:
      rep.eta_star = config.a;
      break;
    case FlowClass::SubsonicOnly:
      rep.eta_star = config.R;
      break;
    case FlowClass::Transonic: {
      rep.r_s_exact = locate_shock(config).r_s;
      // J' decreases through its unique zero; bracket the sign change on the
      // sweep grid and refine.
      const double step = (config.R - config.a) / static_cast<double>(sweep_n - 1);
      double lo = config.a;
      double hi = config.R;
      for (std::size_t i = 1; i + 1 < sweep_n; ++i) {
        const double eta = config.a + step * static_cast<double>(i);
        if (J_prime(eta, config) > 0.0) {
          lo = eta;
        } else {
          hi = eta;
          break;
        }
      }
      Bracket bracket{lo, hi, config.numerics.root_tol, 400};
      rep.eta_star = find_root([&](double eta) { return J_prime(eta, config); }, bracket);
      break;
    }
  }

  // Perturbation scan at the reported maximizer.
  if (rep.eta_star > config.a) {
    rep.x_bound = perturbation_scan_bound(rep.eta_star, config);
    const SweepResult scan = i_curve(config, rep.eta_star, 249);
    double at_zero = std::numeric_limits<double>::infinity();
    double x_nearest = std::numeric_limits<double>::infinity();
    double min_value = std::numeric_limits<double>::infinity();
    for (const auto& [x, value] : scan.samples) {
      if (std::abs(x) < x_nearest) {
        x_nearest = std::abs(x);
        at_zero = value;
      }
      min_value = std::min(min_value, value);
    }
    rep.i_min_at_zero = at_zero <= min_value + 1e-9;
  } else {
    // Empty subsonic region: every trial coincides with the solution.
    rep.x_bound = 0.0;
    rep.i_min_at_zero = true;
  }
  return rep;
}

}  // namespace transonic
