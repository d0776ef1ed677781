#pragma once

// Test-side oracles, kept independent of the library solution paths they
// check.

#include <cmath>
#include <functional>

#include "transonic/radial.hpp"

namespace oracles {

// Quadratic closed form for the branch speeds at gamma = 3:
// V^2 = (q0^2 +- sqrt(q0^4 - (8 k g/(g-1)) (M0/r)^(g-1))) / 2.
inline double closed_form_speed_gamma3(double k, double r, bool supersonic,
                                       const transonic::GasParameters& gas) {
  const double g = gas.gamma;
  const double disc = gas.q_hat0_sq * gas.q_hat0_sq -
                      (8.0 * k * g / (g - 1.0)) * std::pow(gas.m0 / r, g - 1.0);
  const double root = std::sqrt(disc);
  const double v_sq = supersonic ? 0.5 * (gas.q_hat0_sq + root) : 0.5 * (gas.q_hat0_sq - root);
  return std::sqrt(v_sq);
}

// Golden-section maximizer, quadrature-only route to the functional peak.
inline double golden_section_argmax(const std::function<double(double)>& f, double lo, double hi,
                                    double tol_x) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol_x) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

// The standard annulus configuration used throughout the tests.
inline transonic::ModelConfig standard_config() {
  return transonic::make_config(3.0, 1.0, 1.0, 5.0, 6.0, std::sqrt(0.7), std::sqrt(1.8));
}

inline transonic::ModelConfig larger_va_config() {
  return transonic::make_config(3.0, 1.0, 1.0, 5.0, 6.0, std::sqrt(0.95), std::sqrt(1.8));
}

inline transonic::ModelConfig counterexample_config() {
  return transonic::make_config(3.0, 1.0, 1.0, 5.0, 6.0, std::sqrt(0.4), std::sqrt(1.8));
}

inline transonic::ModelConfig gamma14_config() {
  return transonic::make_config(1.4, 1.0, 1.0, 5.0, 6.0, 0.85, 1.5);
}

}  // namespace oracles
