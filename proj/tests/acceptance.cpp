// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs against the standard annulus configuration (gamma=3, c*^2=1,
// M0=1, a=5, R=6, v_a=sqrt(0.7), v_0=sqrt(1.8)) plus its documented variants.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "transonic/variational.hpp"
#include "transonic/verify.hpp"

using namespace transonic;

namespace {

int failures = 0;

void report(int number, const std::string& title, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", number, title.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

bool near_rel(double value, double target, double tol) {
  return std::abs(value / target - 1.0) <= tol;
}

ModelConfig tightened(const ModelConfig& config) {
  ModelConfig tight = config;
  tight.numerics.quad.abs_tol = 1e-13;
  tight.numerics.quad.rel_tol = 1e-13;
  tight.numerics.quad.max_depth = 48;
  return tight;
}

void criterion_1_entropy_constants() {
  const ModelConfig cfg = oracles::standard_config();
  const bool ok = near_rel(cfg.k0, 4.32, 1e-12) && near_rel(cfg.k_a, 91.0 / 12.0, 1e-12);
  std::ostringstream detail;
  detail << std::setprecision(12);
  detail << "k0=" << cfg.k0 << ", k_a=" << cfg.k_a;
  report(1, "entropy constants k0 = 4.32, k_a = 91/12", ok, detail.str());
}

void criterion_2_shock_location() {
  const ModelConfig cfg = oracles::standard_config();
  const double reference = 5.260220746;

  const double r_s = locate_shock(cfg).r_s;

  // variational route 1: derivative-root refinement of the sweep
  const SaddleReport saddle = saddle_report(cfg, 2001);

  // variational route 2: quadrature-only argmax of the reduced functional
  const ModelConfig tight = tightened(cfg);
  const SweepResult coarse = j_curve(cfg, 101);
  std::size_t peak = 0;
  for (std::size_t i = 1; i < coarse.samples.size(); ++i)
    if (coarse.samples[i].second > coarse.samples[peak].second) peak = i;
  const double lo = coarse.samples[peak > 0 ? peak - 1 : 0].first;
  const double hi = coarse.samples[std::min(peak + 1, coarse.samples.size() - 1)].first;
  const double argmax = oracles::golden_section_argmax(
      [&](double eta) { return reduced_J(eta, tight); }, lo, hi, 1e-6);

  const bool ok = std::abs(r_s - reference) <= 1e-6 &&
                  std::abs(saddle.eta_star - reference) <= 1e-5 &&
                  std::abs(argmax - reference) <= 1e-5 && std::abs(saddle.eta_star - r_s) <= 1e-5 &&
                  std::abs(argmax - r_s) <= 1e-5;
  std::ostringstream detail;
  detail << std::setprecision(12);
  detail << "H-crossing r_s=" << r_s << ", J'-root eta*=" << saddle.eta_star
         << ", J-argmax=" << argmax;
  report(2, "shock location 5.260220746 by H-crossing and J-maximization", ok, detail.str());
}

void criterion_3_derivative_table() {
  const ModelConfig cfg = oracles::standard_config();
  const ModelConfig tight = tightened(cfg);
  const double h = 1e-3;
  const auto J = [&](double eta) { return reduced_J(eta, tight); };

  const double fd_R = (3.0 * J(cfg.R) - 4.0 * J(cfg.R - h) + J(cfg.R - 2.0 * h)) / (2.0 * h);
  const double closed_R = J_prime(cfg.R, cfg);
  const double fd_a = (-3.0 * J(cfg.a) + 4.0 * J(cfg.a + h) - J(cfg.a + 2.0 * h)) / (2.0 * h);
  const double closed_a = J_prime(cfg.a, cfg);

  const bool ok = std::abs(fd_R - (-1.28456894)) < 1e-6 &&
                  std::abs(closed_R - (-1.284568972)) < 1e-6 &&
                  std::abs(fd_a - 0.362180988) < 1e-6 &&
                  std::abs(closed_a - 0.3621809759) < 1e-6 && std::abs(fd_R - closed_R) < 1e-6 &&
                  std::abs(fd_a - closed_a) < 1e-6;
  std::ostringstream detail;
  detail << std::setprecision(12);
  detail << "at R: (" << fd_R << ", " << closed_R << "); at a: (" << fd_a << ", " << closed_a
         << ")";
  report(3, "derivative table at the endpoints", ok, detail.str());
}

void criterion_4_larger_va() {
  const ModelConfig cfg = oracles::larger_va_config();
  const double r_s = locate_shock(cfg).r_s;
  const bool ok = near_rel(cfg.k_a, 8.3125, 1e-12) && std::abs(r_s - 5.5363) <= 1e-3;
  std::ostringstream detail;
  detail << std::setprecision(12);
  detail << "k_a=" << cfg.k_a << ", r_s=" << r_s;
  report(4, "larger v_a = sqrt(0.95): k_a = 8.3125, r_s = 5.5363", ok, detail.str());
}

void criterion_5_counterexample() {
  const ModelConfig cfg = oracles::counterexample_config();
  bool ok = near_rel(cfg.k_a, 16.0 / 3.0, 1e-12);
  ok = ok && existence_report(cfg).classification == FlowClass::SupersonicOnly;

  bool no_crossing = false;
  try {
    locate_shock(cfg);
  } catch (const NoCrossingError&) {
    no_crossing = true;
  }
  ok = ok && no_crossing;

  const SweepResult curve = j_curve(cfg, 2001);
  double max_value = -1e300;
  for (const auto& [eta, value] : curve.samples) max_value = std::max(max_value, value);
  ok = ok && curve.samples.front().second >= max_value - 1e-9;

  std::ostringstream detail;
  detail << std::setprecision(12);
  detail << "k_a=" << cfg.k_a << ", no crossing=" << (no_crossing ? "yes" : "no")
         << ", J(a)-max=" << curve.samples.front().second - max_value;
  report(5, "counterexample v_a = sqrt(0.4): supersonic-only, J maximal at a", ok, detail.str());
}

void criterion_6_subsonic_only() {
  const ModelConfig cfg = make_subsonic_only_config(3.0, 1.0, 1.0, 5.0, 6.0, std::sqrt(0.7));
  const SweepResult curve = j_curve(cfg, 2001);
  double max_value = -1e300;
  for (const auto& [eta, value] : curve.samples) max_value = std::max(max_value, value);
  const bool ok = curve.samples.back().second >= max_value - 1e-9;
  std::ostringstream detail;
  detail << std::setprecision(12);
  detail << "J(R)-max=" << curve.samples.back().second - max_value;
  report(6, "subsonic-only mode: J maximal at eta = R on the sweep", ok, detail.str());
}

void criterion_7_rankine_hugoniot() {
  const ModelConfig cfg = oracles::standard_config();
  const ShockSolution sol = locate_shock(cfg);
  const RhResiduals& res = sol.residuals;
  const bool ok = std::abs(res.mass) < 1e-9 && std::abs(res.momentum) < 1e-9 &&
                  std::abs(res.energy) < 1e-9 && std::abs(res.prandtl) < 1e-9;
  std::ostringstream detail;
  detail << std::setprecision(12);
  detail << "mass=" << res.mass << ", momentum=" << res.momentum << ", energy=" << res.energy
         << ", prandtl=" << res.prandtl;
  report(7, "Rankine-Hugoniot and Prandtl residuals below 1e-9", ok, detail.str());
}

bool run_suite(const ModelConfig& cfg, std::ostringstream& detail) {
  detail << std::setprecision(12);
  const std::vector<CheckResult> results = run_verification(cfg, 2001);
  bool ok = true;
  int applicable = 0;
  for (const CheckResult& c : results) {
    if (!c.applicable) continue;
    ++applicable;
    if (!c.passed) {
      ok = false;
      detail << " [" << c.name << " measure=" << c.measure << "]";
    }
  }
  detail << applicable << " checks";
  return ok;
}

void criterion_8_property_suite() {
  std::ostringstream detail;
  detail << std::setprecision(12);
  const bool ok = run_suite(oracles::standard_config(), detail);
  report(8, "invariant suite on the standard configuration", ok, detail.str());
}

void criterion_9_cross_gamma() {
  const ModelConfig cfg = oracles::gamma14_config();
  std::ostringstream detail;
  detail << std::setprecision(12);
  bool ok = run_suite(cfg, detail);

  const ExistenceReport rep = existence_report(cfg);
  detail << ", class=" << to_string(rep.classification);
  if (rep.classification == FlowClass::Transonic) {
    const RhResiduals res = locate_shock(cfg).residuals;
    ok = ok && std::abs(res.mass) < 1e-9 && std::abs(res.momentum) < 1e-9 &&
         std::abs(res.energy) < 1e-9 && std::abs(res.prandtl) < 1e-9;
    detail << ", max RH residual="
           << std::max({std::abs(res.mass), std::abs(res.momentum), std::abs(res.energy),
                        std::abs(res.prandtl)});
  }
  report(9, "gamma = 1.4 smoke test (suite + residuals)", ok, detail.str());
}

}  // namespace

int main() {
  criterion_1_entropy_constants();
  criterion_2_shock_location();
  criterion_3_derivative_table();
  criterion_4_larger_va();
  criterion_5_counterexample();
  criterion_6_subsonic_only();
  criterion_7_rankine_hugoniot();
  criterion_8_property_suite();
  criterion_9_cross_gamma();

  if (failures == 0)
    std::printf("acceptance: all 9 criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
