#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "transonic/variational.hpp"

using namespace transonic;

namespace {
constexpr double kShockRadius = 5.26022075229913655;  // standard configuration
}

TEST_CASE("reduced_J: frozen values and the interior maximum") {
  const ModelConfig cfg = oracles::standard_config();
  CHECK(reduced_J(kShockRadius, cfg) == doctest::Approx(-19.7870534085227542).epsilon(1e-9));
  CHECK(reduced_J(5.1, cfg) == doctest::Approx(-19.8058423228314301).epsilon(1e-9));
  CHECK(reduced_J(5.5, cfg) == doctest::Approx(-19.8321042328302885).epsilon(1e-9));
  CHECK(reduced_J(cfg.a, cfg) == doctest::Approx(-19.8355804317902005).epsilon(1e-9));
  CHECK(reduced_J(cfg.R, cfg) == doctest::Approx(-20.2437705713837125).epsilon(1e-9));

  CHECK(reduced_J(kShockRadius, cfg) > reduced_J(5.1, cfg));
  CHECK(reduced_J(kShockRadius, cfg) > reduced_J(5.5, cfg));
}

TEST_CASE("functional_I: perturbation raises the functional") {
  const ModelConfig cfg = oracles::standard_config();
  const double at_zero = functional_I({kShockRadius, 0.0}, cfg);
  const double plus = functional_I({kShockRadius, 0.3}, cfg);
  const double minus = functional_I({kShockRadius, -0.3}, cfg);
  CHECK(plus == doctest::Approx(-19.7844823652026206).epsilon(1e-9));
  CHECK(minus == doctest::Approx(-19.7841206318178587).epsilon(1e-9));
  CHECK(at_zero < plus);
  CHECK(at_zero < minus);
}

TEST_CASE("functional_I: the admissible perturbation window") {
  const ModelConfig cfg = oracles::standard_config();
  CHECK_NOTHROW(functional_I({kShockRadius, 0.62}, cfg));
  CHECK_NOTHROW(functional_I({kShockRadius, -0.62}, cfg));
  CHECK_THROWS_AS(functional_I({kShockRadius, 0.63}, cfg), std::domain_error);
  CHECK_THROWS_AS(functional_I({kShockRadius, -0.63}, cfg), std::domain_error);
  CHECK_THROWS_AS(functional_I({4.9, 0.0}, cfg), std::domain_error);  // eta below a
  CHECK(perturbation_scan_bound(kShockRadius, cfg) == doctest::Approx(0.62).epsilon(1e-14));
}

TEST_CASE("J_prime: endpoint values and the critical point") {
  const ModelConfig cfg = oracles::standard_config();
  CHECK(J_prime(cfg.R, cfg) == doctest::Approx(-1.28456895853341466).epsilon(1e-10));
  CHECK(J_prime(cfg.a, cfg) == doctest::Approx(0.36218099122880241).epsilon(1e-10));
  CHECK(std::abs(J_prime(locate_shock(cfg).r_s, cfg)) < 1e-8);
}

TEST_CASE("J_prime matches the finite difference of reduced_J") {
  ModelConfig cfg = oracles::standard_config();
  cfg.numerics.quad.abs_tol = 1e-12;
  cfg.numerics.quad.rel_tol = 1e-12;
  cfg.numerics.quad.max_depth = 48;
  for (const double eta : {5.15, 5.4, 5.85}) {
    const double fd = central_diff([&](double e) { return reduced_J(e, cfg); }, eta, 1e-3);
    CHECK(std::abs(fd - J_prime(eta, cfg)) < 1e-6);
  }
}

TEST_CASE("second_variation: positivity, null, quadratic scaling") {
  const ModelConfig cfg = oracles::standard_config();
  const double unit = second_variation([](double) { return 1.0; }, kShockRadius, cfg);
  CHECK(unit == doctest::Approx(2.5075960132217210784).epsilon(1e-9));
  CHECK(unit > 0.0);

  CHECK(second_variation([](double) { return 0.0; }, kShockRadius, cfg) == 0.0);

  const double doubled = second_variation([](double) { return 2.0; }, kShockRadius, cfg);
  CHECK(doubled == doctest::Approx(4.0 * unit).epsilon(1e-10));
  CHECK(doubled == doctest::Approx(10.030384052886884313).epsilon(1e-9));

  CHECK(second_variation([](double r) { return std::sin(3.0 * r); }, kShockRadius, cfg) ==
        doctest::Approx(0.31297291925797777915).epsilon(1e-9));

  std::mt19937 rng(5150u);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  for (int i = 0; i < 10; ++i) {
    const double c0 = coeff(rng);
    const double c1 = coeff(rng);
    const double c2 = coeff(rng);
    if (c0 == 0.0 && c1 == 0.0) continue;
    const double value = second_variation(
        [&](double r) { return c0 + c1 * std::cos(c2 * r); }, kShockRadius, cfg);
    CHECK(value > 0.0);
  }
}

TEST_CASE("saddle_report: standard configuration") {
  const ModelConfig cfg = oracles::standard_config();
  const SaddleReport rep = saddle_report(cfg, 2001);
  CHECK(rep.classification == FlowClass::Transonic);
  CHECK(std::abs(rep.eta_star - 5.260220746) < 1e-5);
  CHECK(std::abs(rep.eta_star - rep.r_s_exact) < 1e-5);
  CHECK(rep.j_prime_at_a > 0.0);
  CHECK(rep.j_prime_at_R < 0.0);
  CHECK(rep.i_min_at_zero);
  CHECK(rep.x_bound == doctest::Approx(0.62).epsilon(1e-14));
}

TEST_CASE("saddle_report: degenerate classes sit at the boundary") {
  const SaddleReport sup = saddle_report(oracles::counterexample_config(), 501);
  CHECK(sup.classification == FlowClass::SupersonicOnly);
  CHECK(sup.eta_star == 5.0);
  CHECK(sup.j_prime_at_a < 0.0);
  CHECK(sup.j_prime_at_R < 0.0);

  const ModelConfig sub_mode = make_subsonic_only_config(3.0, 1.0, 1.0, 5.0, 6.0, std::sqrt(0.7));
  const SaddleReport sub = saddle_report(sub_mode, 501);
  CHECK(sub.classification == FlowClass::SubsonicOnly);
  CHECK(sub.eta_star == 6.0);
  CHECK(sub.i_min_at_zero);
}

TEST_CASE("j_curve: sweep matches pointwise evaluation and peaks at the shock") {
  const ModelConfig cfg = oracles::standard_config();
  const SweepResult curve = j_curve(cfg, 2001);
  REQUIRE(curve.samples.size() == 2001);
  CHECK(curve.samples.front().first == cfg.a);
  CHECK(curve.samples.back().first == cfg.R);

  // cumulative evaluation equals the direct quadrature
  CHECK(curve.samples.front().second == doctest::Approx(reduced_J(cfg.a, cfg)).epsilon(1e-9));
  CHECK(curve.samples[1000].second ==
        doctest::Approx(reduced_J(curve.samples[1000].first, cfg)).epsilon(1e-9));
  CHECK(curve.samples.back().second == doctest::Approx(reduced_J(cfg.R, cfg)).epsilon(1e-9));

  std::size_t argmax = 0;
  for (std::size_t i = 1; i < curve.samples.size(); ++i)
    if (curve.samples[i].second > curve.samples[argmax].second) argmax = i;
  const double grid_step = (cfg.R - cfg.a) / 2000.0;
  CHECK(std::abs(curve.samples[argmax].first - 5.260220746) <= grid_step + 1e-12);
}

TEST_CASE("j_curve: degenerate classes peak at the boundaries") {
  // supersonic everywhere: strictly decreasing sweep
  const SweepResult sup = j_curve(oracles::counterexample_config(), 501);
  double max_sup = -1e300;
  for (const auto& [eta, value] : sup.samples) max_sup = std::max(max_sup, value);
  CHECK(sup.samples.front().second >= max_sup - 1e-9);
  CHECK(sup.samples.front().second > sup.samples.back().second);

  // shared-entropy mode: flat curve, the last row attains the maximum
  const ModelConfig sub_mode = make_subsonic_only_config(3.0, 1.0, 1.0, 5.0, 6.0, std::sqrt(0.7));
  const SweepResult sub = j_curve(sub_mode, 501);
  double max_sub = -1e300;
  for (const auto& [eta, value] : sub.samples) max_sub = std::max(max_sub, value);
  CHECK(sub.samples.back().second >= max_sub - 1e-9);
  CHECK(sub.samples.back().second == doctest::Approx(-20.2437705713837125).epsilon(1e-9));

  // data-driven subsonic-only annulus: strictly increasing toward R
  const ModelConfig shifted = make_config(3.0, 1.0, 1.0, 5.0, 5.1, std::sqrt(0.7), std::sqrt(1.8));
  const SweepResult dd = j_curve(shifted, 301);
  CHECK(dd.samples.front().second == doctest::Approx(-1.9901552191951496346).epsilon(1e-9));
  CHECK(dd.samples.back().second == doctest::Approx(-1.9458730324647188657).epsilon(1e-9));
  for (std::size_t i = 1; i < dd.samples.size(); ++i)
    CHECK(dd.samples[i].second > dd.samples[i - 1].second);
}

TEST_CASE("i_curve: scan bounds and the minimum at zero") {
  const ModelConfig cfg = oracles::standard_config();
  const double eta = locate_shock(cfg).r_s;
  const SweepResult scan = i_curve(cfg, eta, 249);
  REQUIRE(scan.samples.size() == 249);
  CHECK(scan.samples.front().first == doctest::Approx(-0.62).epsilon(1e-14));
  CHECK(scan.samples.back().first == doctest::Approx(0.62).epsilon(1e-14));
  CHECK(scan.samples[124].first == 0.0);

  const double at_zero = scan.samples[124].second;
  for (const auto& [x, value] : scan.samples) {
    if (x != 0.0) CHECK(value > at_zero);
  }
}

TEST_CASE("existence criteria match the derivative sign pattern") {
  const auto agrees = [](const ModelConfig& cfg) {
    const bool by_signs = J_prime(cfg.a, cfg) > 0.0 && J_prime(cfg.R, cfg) < 0.0;
    const bool by_class = existence_report(cfg).classification == FlowClass::Transonic;
    return by_signs == by_class;
  };
  CHECK(agrees(oracles::standard_config()));
  CHECK(agrees(oracles::larger_va_config()));
  CHECK(agrees(oracles::counterexample_config()));
  CHECK(agrees(oracles::gamma14_config()));
  CHECK(agrees(make_config(3.0, 1.0, 1.0, 5.0, 5.1, std::sqrt(0.7), std::sqrt(1.8))));
}

TEST_CASE("saddle_report: gamma=1.4 transonic case") {
  const SaddleReport rep = saddle_report(oracles::gamma14_config(), 1001);
  CHECK(rep.classification == FlowClass::Transonic);
  CHECK(std::abs(rep.eta_star - 5.4237881230427913899) < 1e-8);
  CHECK(rep.j_prime_at_a == doctest::Approx(0.3208335784232616).epsilon(1e-8));
  CHECK(rep.j_prime_at_R == doctest::Approx(-0.5845926999432124).epsilon(1e-8));
  CHECK(rep.i_min_at_zero);
}
