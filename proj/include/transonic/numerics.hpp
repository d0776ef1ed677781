#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace transonic {

// Deterministic scalar kernels shared by the flow solvers: bracketed root
// finding, adaptive Simpson quadrature, uniform sweeps, central differences.

struct NoSignChangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MaxIterationsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MaxDepthError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Bracket {
  double lo = 0.0;
  double hi = 1.0;
  double tol_x = 1e-12;  // absolute abscissa tolerance
  int max_iter = 200;
};

struct QuadratureSpec {
  double abs_tol = 1e-11;
  double rel_tol = 1e-10;
  int max_depth = 40;
};

// (abscissa, value) table, one row per sample.
struct SweepResult {
  std::vector<std::pair<double, double>> samples;
};

using ScalarFn = std::function<double(double)>;

/// Locate a root of f inside [bracket.lo, bracket.hi].
///
/// Illinois-damped false position with a bisection safeguard; the returned
/// abscissa always lies inside the initial bracket and the final bracket
/// width is at most tol_x. Throws NoSignChangeError if f(lo)*f(hi) > 0 and
/// MaxIterationsError if the iteration cap is hit.
double find_root(const ScalarFn& f, const Bracket& bracket);

/// Adaptive Simpson estimate of the integral of f over [a, b].
/// integrate(f, a, a) == 0 exactly; swapping the limits flips the sign.
/// Throws MaxDepthError if the refinement cap is reached before the
/// tolerances are met.
double integrate(const ScalarFn& f, double a, double b,
                 const QuadratureSpec& spec = {});

/// n uniformly spaced samples of f on [a, b], endpoints included. n >= 2.
SweepResult sweep(const ScalarFn& f, double a, double b, std::size_t n);

/// Second-order central difference (f(x+h) - f(x-h)) / (2h), h > 0.
double central_diff(const ScalarFn& f, double x, double h);

}  // namespace transonic
