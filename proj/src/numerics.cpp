#include "transonic/numerics.hpp"

#include <cmath>
#include <sstream>

namespace transonic {

double find_root(const ScalarFn& f, const Bracket& bracket) {
  double lo = bracket.lo;
  double hi = bracket.hi;
  if (!(lo < hi)) throw std::invalid_argument("find_root: requires lo < hi");
  if (!(bracket.tol_x > 0.0)) throw std::invalid_argument("find_root: tol_x must be positive");

  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) {
    std::ostringstream msg;
    msg << "find_root: no sign change on [" << lo << ", " << hi << "]: f(lo)=" << flo
        << ", f(hi)=" << fhi;
    throw NoSignChangeError(msg.str());
  }

  // Illinois false position: the retained endpoint's value is halved when the
  // same side wins twice, which prevents one-sided stagnation. Every few
  // iterations fall back to plain bisection so the bracket width provably
  // shrinks.
  int stale_side = 0;  // -1 lo retained, +1 hi retained
  for (int iter = 0; iter < bracket.max_iter; ++iter) {
    const double width = hi - lo;
    if (width <= bracket.tol_x) return 0.5 * (lo + hi);

    double x;
    if (iter % 3 == 2) {
      x = 0.5 * (lo + hi);
    } else {
      x = (lo * fhi - hi * flo) / (fhi - flo);
      const double guard = 0.01 * width;
      if (!(x > lo + guard) || !(x < hi - guard)) x = 0.5 * (lo + hi);
    }

    const double fx = f(x);
    if (fx == 0.0) return x;
    if (flo * fx < 0.0) {
      hi = x;
      fhi = fx;
      if (stale_side == -1) flo *= 0.5;
      stale_side = -1;
    } else {
      lo = x;
      flo = fx;
      if (stale_side == +1) fhi *= 0.5;
      stale_side = +1;
    }
  }
  throw MaxIterationsError("find_root: iteration cap reached before bracket width <= tol_x");
}

namespace {

struct SimpsonPanel {
  double fa, fm, fb;
  double estimate;
};

SimpsonPanel make_panel(const ScalarFn& f, double a, double b, double fa, double fb) {
  SimpsonPanel p;
  p.fa = fa;
  p.fb = fb;
  p.fm = f(0.5 * (a + b));
  p.estimate = (b - a) / 6.0 * (fa + 4.0 * p.fm + fb);
  return p;
}

double simpson_recurse(const ScalarFn& f, double a, double b, const SimpsonPanel& whole,
                       double tol, int depth, int max_depth) {
  const double m = 0.5 * (a + b);
  const SimpsonPanel left = make_panel(f, a, m, whole.fa, whole.fm);
  const SimpsonPanel right = make_panel(f, m, b, whole.fm, whole.fb);
  const double refined = left.estimate + right.estimate;
  const double err = refined - whole.estimate;
  if (std::abs(err) <= 15.0 * tol) return refined + err / 15.0;
  if (depth >= max_depth)
    throw MaxDepthError("integrate: max_depth reached before tolerances were met");
  return simpson_recurse(f, a, m, left, 0.5 * tol, depth + 1, max_depth) +
         simpson_recurse(f, m, b, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate(const ScalarFn& f, double a, double b, const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0))
    throw std::invalid_argument("integrate: tolerances must be positive");
  if (a == b) return 0.0;
  if (b < a) return -integrate(f, b, a, spec);

  const double fa = f(a);
  const double fb = f(b);
  const SimpsonPanel whole = make_panel(f, a, b, fa, fb);
  const double scale = std::abs(whole.estimate);
  const double tol = std::max(spec.abs_tol, spec.rel_tol * scale);
  return simpson_recurse(f, a, b, whole, tol, 0, spec.max_depth);
}

SweepResult sweep(const ScalarFn& f, double a, double b, std::size_t n) {
  if (n < 2) throw std::invalid_argument("sweep: need at least 2 samples");
  SweepResult out;
  out.samples.reserve(n);
  const double step = (b - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = (i + 1 == n) ? b : a + step * static_cast<double>(i);
    out.samples.emplace_back(x, f(x));
  }
  return out;
}

double central_diff(const ScalarFn& f, double x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("central_diff: h must be positive");
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace transonic
