#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bshift/bounds.hpp"
#include "bshift/random.hpp"

using namespace bshift;

// Expected values below were frozen from a high-precision reference
// implementation (1024-point log grid + golden refinement over gamma, and
// bisection over alpha with a refined inner extremum over beta).

TEST_CASE("thm1_measure_lower_bound") {
  const auto [value, gamma] = thm1_maximize(0.1);
  CHECK(value == Catch::Approx(0.6133092642776483).margin(1e-8));
  CHECK(gamma == Catch::Approx(0.158605).margin(1e-3));

  CHECK(thm1_measure_lower_bound(1e-4) > 0.98);

  // non-increasing in eps
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 20; ++i) {
    const double v = thm1_measure_lower_bound(0.24 * i / 21.0);
    CHECK(v <= prev + 1e-12);
    CHECK(v > 0.0);
    CHECK(v < 1.0);
    prev = v;
  }

  CHECK_THROWS_AS(thm1_measure_lower_bound(0.0), std::invalid_argument);
  CHECK_THROWS_AS(thm1_measure_lower_bound(0.25), std::invalid_argument);
}

TEST_CASE("thm2_f0_upper_bound") {
  CHECK(thm2_f0_upper_bound(0.1, 0.1) ==
        Catch::Approx(std::pow(9.0, -0.8)).margin(1e-14));
  CHECK(thm2_f0_upper_bound(0.1, 0.1) == Catch::Approx(0.17242728599059554).margin(1e-14));

  // delta -> 1 tends to 1 - eps, delta -> 0 tends to eps
  CHECK(thm2_f0_upper_bound(0.3, 0.999) == Catch::Approx(0.7049594562513587).margin(1e-12));
  CHECK(thm2_f0_upper_bound(0.3, 1e-5) == Catch::Approx(0.3).margin(1e-3));

  // the backward-shift witness sits within 1e-4 of 1 - alpha = 0.704698
  const double witness = thm2_f0_upper_bound(0.295302 + 0.476286, 0.295302 / 0.476286);
  CHECK(witness == Catch::Approx(0.7047000572478301).margin(1e-10));
  CHECK(std::abs(witness - 0.704698) < 1e-4);

  CHECK_THROWS_AS(thm2_f0_upper_bound(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(thm2_f0_upper_bound(0.5, 1.0), std::invalid_argument);
}

TEST_CASE("verify_h1_szop_witness") {
  // the published triple passes with a margin of a few 1e-6
  const bound_certificate c = verify_h1_szop_witness(0.047604, 0.127079, 0.104634);
  CHECK(c.pass);
  CHECK(c.margin() == Catch::Approx(7.378249202827e-6).margin(1e-10));

  // smaller alpha makes the contradiction easier, not harder
  const bound_certificate easier = verify_h1_szop_witness(0.04, 0.127079, 0.104634);
  CHECK(easier.pass);
  CHECK(easier.margin() == Catch::Approx(0.3970723037212665 - 0.314764831325396).margin(1e-9));

  // eps = alpha + beta = 0.4 violates the precondition
  CHECK_THROWS_AS(verify_h1_szop_witness(0.2, 0.2, 0.5), std::invalid_argument);
}

TEST_CASE("verify_h1_bshift_witness") {
  // strict margin is -2.06e-6: inside the 1e-4 boundary band
  const bound_certificate c = verify_h1_bshift_witness(0.295302, 0.476286);
  CHECK(c.pass);
  CHECK(c.params.at("boundary_band") == 1.0);
  CHECK(c.lhs - c.rhs == Catch::Approx(-2.0572478e-6).margin(1e-10));
  CHECK(c.params.at("range_warning") == 1.0);  // eps ~ 0.77, delta ~ 0.62

  const bound_certificate wide = verify_h1_bshift_witness(0.4, 0.476286);
  CHECK(wide.pass);
  CHECK(wide.lhs - wide.rhs > 0.3);

  const bound_certificate fail = verify_h1_bshift_witness(0.1, 0.476286);
  CHECK_FALSE(fail.pass);
  CHECK(fail.lhs < fail.rhs);
}

TEST_CASE("verify_a1_witness") {
  const bound_certificate c = verify_a1_witness(0.165, 0.506);
  CHECK(c.pass);
  CHECK(c.lhs == Catch::Approx(0.16320178361298435).margin(1e-12));
  CHECK(c.rhs == Catch::Approx(0.16304347826086957).margin(1e-12));
  CHECK(c.lhs - c.rhs == Catch::Approx(1.5830535211477925e-4).margin(1e-10));
  CHECK(c.params.at("range_warning") == 1.0);  // beta = .506 > 1/2

  const bound_certificate off = verify_a1_witness(0.5, 0.25);
  CHECK_FALSE(off.pass);  // lhs ~ 0.099 < rhs = 1

  // small beta: lhs collapses like beta/3
  const bound_certificate tiny = verify_a1_witness(0.1, 0.01);
  CHECK_FALSE(tiny.pass);
  CHECK(tiny.lhs < 0.5);

  CHECK_THROWS_AS(verify_a1_witness(0.6, 0.5), std::invalid_argument);
}

TEST_CASE("optimizers reproduce the headline constants") {
  const optimizer_result szop = optimize_h1_szop();
  CHECK(szop.bound == Catch::Approx(1.952396).margin(5e-3));
  CHECK(szop.bound == Catch::Approx(1.9523953178988607).margin(1e-4));
  CHECK(szop.witness.pass);
  CHECK(szop.alpha == Catch::Approx(0.047604).margin(1e-3));
  CHECK(szop.beta == Catch::Approx(0.127079).margin(2e-2));

  const optimizer_result bsh = optimize_h1_bshift();
  CHECK(bsh.bound == Catch::Approx(1.7047).margin(5e-3));
  CHECK(bsh.bound == Catch::Approx(1.7046973345012189).margin(1e-4));
  CHECK(bsh.witness.pass);
  CHECK(bsh.alpha == Catch::Approx(0.295302).margin(1e-3));
  CHECK(bsh.beta == Catch::Approx(0.476286).margin(1e-2));
  CHECK(bsh.bound < 1.952396);  // the B bound is the stronger one

  const optimizer_result a1 = optimize_a1();
  CHECK(a1.bound == Catch::Approx(1.835).margin(5e-3));
  CHECK(a1.bound == Catch::Approx(1.8348932713868387).margin(1e-4));
  CHECK(a1.witness.pass);
  CHECK(a1.bound < 2.0);
}

TEST_CASE("optimizer boundaries") {
  const optimizer_result szop = optimize_h1_szop();
  CHECK(h1_szop_best_margin(szop.alpha - 1e-2).first > 0.0);
  CHECK(h1_szop_best_margin(szop.alpha + 1e-4).first < -kWitnessBand);

  const optimizer_result bsh = optimize_h1_bshift();
  CHECK(h1_bshift_worst_margin(bsh.alpha + 1e-4).first > 0.0);
  CHECK(h1_bshift_worst_margin(bsh.alpha - 1e-2).first < -kWitnessBand);

  const optimizer_result a1 = optimize_a1();
  CHECK(a1_best_margin(a1.alpha - 1e-2).first > 0.0);
  CHECK(a1_best_margin(a1.alpha + 1e-4).first < 0.0);
}

TEST_CASE("interpolation_bound") {
  CHECK(interpolation_bound(2.0) == 1.0);
  CHECK(interpolation_bound(1.0) == 2.0);
  CHECK(interpolation_bound(4.0) == Catch::Approx(std::sqrt(2.0)).margin(1e-15));
  CHECK(interpolation_bound(std::numeric_limits<double>::infinity()) == 2.0);
  CHECK_THROWS_AS(interpolation_bound(0.5), std::invalid_argument);
}

TEST_CASE("sharp_szr_constant") {
  CHECK(sharp_szr_constant(0.0) == Catch::Approx(0.0).margin(1e-15));
  CHECK(sharp_szr_constant(0.5) == Catch::Approx(2.0 / 3.0).margin(1e-14));
  CHECK(sharp_szr_constant(1.0) == Catch::Approx(2.0).margin(1e-15));
  CHECK_THROWS_AS(sharp_szr_constant(1.5), std::invalid_argument);
}

TEST_CASE("bergman_transfer_check") {
  const radial_weight w = radial_weight::lebesgue(128);

  // f(0) = 0: szop is the identity, any K >= 1 passes
  const taylor_fn zf({0.0, 1.0, cplx(0.0, 0.5)});
  CHECK(bergman_transfer_check(zf, 1.0, w, 1.0, 512).pass);

  xoshiro256 rng(101);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<cplx> c(9);
    for (auto& a : c) a = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const taylor_fn f(std::move(c));
    CHECK(bergman_transfer_check(f, 2.0, w, 1.0, 512).pass);
    const bound_certificate trans = bergman_transfer_check(f, 1.0, w, 1.952396, 512);
    CHECK(trans.pass);  // includes ||B f|| <= 2 K ||f|| for the increasing weight
    CHECK(trans.params.count("bshift_lhs") == 1);
  }

  CHECK_THROWS_AS(bergman_transfer_check(taylor_fn({0.0}), 1.0, w, 1.0, 128),
                  std::invalid_argument);
}
