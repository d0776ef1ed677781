#pragma once

#include <functional>

#include "transonic/numerics.hpp"
#include "transonic/radial.hpp"

namespace transonic {

// Radial form of the flow functional: I compares a trial profile (subsonic
// branch on [a, eta], possibly speed-perturbed, against the upstream
// continuation on [eta, R]); J(eta) is I at zero perturbation. All values are
// reported divided by 2*pi.

// Trial profile: assigned shock radius eta plus a perturbation amplitude x
// that adds x*(r - a) to the subsonic speed on [a, eta]. x = 0 is the branch
// solution. The perturbed speed must stay inside (0, c*), enforced through
// the uniform bound max V + |x|(eta - a) < c*, min V - |x|(eta - a) > 0.
struct TrialProfile {
  double eta;
  double x = 0.0;
};

/// I/(2*pi) for the trial profile. Throws std::domain_error when eta leaves
/// [a, R] or the perturbation bound is violated.
double functional_I(const TrialProfile& trial, const ModelConfig& config);

/// J(eta)/(2*pi) = functional_I at x = 0, eta in [a, R].
double reduced_J(double eta, const ModelConfig& config);

/// Closed-form derivative (1/2*pi) J'(eta) =
/// gamma^(g/(g-1)) k_a^(1/(g-1)) (H_sup(k0, eta) - H_sub(k_a, eta)),
/// valid up to the endpoints. In SubsonicOnly mode the upstream continuation
/// is the same subsonic branch, so J' vanishes identically.
double J_prime(double eta, const ModelConfig& config);

/// Second variation (1/2*pi) I'' at fixed eta in the perturbation direction
/// with radial slope w_r:
/// (g (g+1)/2) Int_a^eta (c^2)^((2-g)/(g-1)) w_r^2 (c*^2 - V^2) r dr
/// on the subsonic branch; strictly positive for any nonzero w_r while the
/// branch stays subsonic.
double second_variation(const std::function<double(double)>& w_r, double eta,
                        const ModelConfig& config);

/// Largest admissible |x| for TrialProfile at this eta (uniform bound with a
/// 1% safety margin, floored to two decimals so the standard configuration
/// scans exactly [-0.62, 0.62]).
double perturbation_scan_bound(double eta, const ModelConfig& config);

struct SaddleReport {
  FlowClass classification;
  double eta_star;       // argmax of J: interior root of J' when Transonic,
                         // else the boundary the classification dictates
  double r_s_exact;      // shock radius from the H-curve crossing (NaN if none)
  double j_prime_at_a;   // one-sided derivative values, closed form
  double j_prime_at_R;
  double x_bound;        // half-width of the I(x) scan
  bool i_min_at_zero;    // I(x) scan at eta_star attains its minimum at x = 0
};

/// Sweep-plus-refinement verification of the saddle structure: J is maximal
/// over eta at the shock radius and I is minimal over the perturbation at
/// that eta.
SaddleReport saddle_report(const ModelConfig& config, std::size_t sweep_n);

/// (eta, J/2*pi) on n uniform samples of [a, R], accumulated segment by
/// segment so the whole curve costs one pass of quadratures.
SweepResult j_curve(const ModelConfig& config, std::size_t n);

/// (x, I/2*pi) at fixed eta on n uniform samples of [-bound, bound] where
/// bound = perturbation_scan_bound(eta). Odd n keeps x = 0 on the grid.
SweepResult i_curve(const ModelConfig& config, double eta, std::size_t n);

}  // namespace transonic
