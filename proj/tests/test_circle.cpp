#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bshift/circle.hpp"
#include "bshift/random.hpp"
#include "bshift/spaces.hpp"

using namespace bshift;

TEST_CASE("mean") {
  const std::size_t n = 256;
  CHECK(mean(real_fn(std::vector<double>(n, 1.0))) == 1.0);

  const real_fn cosine = real_fn::sampled(n, [](double t) { return std::cos(t); });
  CHECK(std::abs(mean(cosine)) < 1e-12);

  const real_fn kernel = poisson_kernel_samples(0.5, 4096);
  CHECK(std::abs(mean(kernel) - 1.0) < 1e-9);
}

TEST_CASE("lp_norm") {
  const std::size_t n = 512;
  for (double p : {0.5, 1.0, 2.0, 7.0, std::numeric_limits<double>::infinity()})
    CHECK(lp_norm(real_fn(std::vector<double>(n, -3.25)), p) == Catch::Approx(3.25).margin(1e-14));

  // indicator of half the circle
  std::vector<double> half(n, 0.0);
  for (std::size_t k = 0; k < n / 2; ++k) half[k] = 1.0;
  CHECK(lp_norm(real_fn(std::move(half)), 1.0) == Catch::Approx(0.5).margin(1e-14));

  // || P_{1/2} - 1 ||_1 = 2/3: the sharp constant at r = 1/2
  const std::size_t big = 1 << 16;
  real_fn diff = poisson_kernel_samples(0.5, big);
  for (std::size_t k = 0; k < big; ++k) diff[k] -= 1.0;
  CHECK(lp_norm(diff, 1.0) == Catch::Approx(2.0 / 3.0).margin(1e-5));

  CHECK_THROWS_AS(lp_norm(diff, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lp_norm(diff, -1.0), std::invalid_argument);
}

TEST_CASE("convolve") {
  const std::size_t n = 4096;
  xoshiro256 rng(42);
  std::vector<double> fs(n);
  for (double& v : fs) v = rng.uniform(-1.0, 1.0);
  const real_fn f(std::move(fs));

  // f * 1 is the constant mean(f)
  const real_fn conv1 = convolve(f, real_fn(std::vector<double>(n, 1.0)));
  for (std::size_t k = 0; k < n; k += 97)
    CHECK(conv1[k] == Catch::Approx(mean(f)).margin(1e-12));

  // semigroup: P_r * P_s = P_{rs}
  const real_fn prs = convolve(poisson_kernel_samples(0.5, n), poisson_kernel_samples(0.5, n));
  for (std::size_t k = 0; k < n; k += 61)
    CHECK(prs[k] == Catch::Approx(poisson_kernel(0.25, prs.theta(k))).margin(1e-6));

  // P_r * boundary equals the Poisson extension; oracle = direct Poisson sum
  const real_fn ext = convolve(poisson_kernel_samples(0.3, n), f);
  for (std::size_t j = 0; j < n; j += 499) {
    double direct = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      direct += poisson_kernel(0.3, ext.theta(j) - f.theta(k)) * f[k];
    CHECK(ext[j] == Catch::Approx(direct / static_cast<double>(n)).margin(1e-9));
  }

  CHECK_THROWS_AS(convolve(f, real_fn(std::vector<double>(64, 0.0))), std::invalid_argument);
}

TEST_CASE("convolve matches the direct sum off the fast path") {
  // non-power-of-two N exercises the O(N^2) branch; power-of-two the FFT one
  for (std::size_t n : {24u, 64u}) {
    xoshiro256 rng(7 + n);
    std::vector<double> fs(n), gs(n);
    for (double& v : fs) v = rng.uniform(-2.0, 2.0);
    for (double& v : gs) v = rng.uniform(-2.0, 2.0);
    const real_fn f(fs), g(gs);
    const real_fn c = convolve(f, g);
    for (std::size_t j = 0; j < n; ++j) {
      double direct = 0.0;
      for (std::size_t k = 0; k < n; ++k) direct += fs[k] * gs[(j + n - k) % n];
      CHECK(c[j] == Catch::Approx(direct / static_cast<double>(n)).margin(1e-12));
    }
  }
}

TEST_CASE("decreasing_rearrangement") {
  const real_fn f(std::vector<double>{3.0, 1.0, 2.0, 0.0});
  const real_fn sorted = decreasing_rearrangement(f);
  CHECK(sorted.samples() == std::vector<double>{3.0, 2.0, 1.0, 0.0});

  xoshiro256 rng(3);
  std::vector<double> s(1024);
  for (double& v : s) v = rng.uniform(-4.0, 4.0);
  const real_fn g(std::move(s));
  const real_fn gr = decreasing_rearrangement(g);
  for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()})
    CHECK(lp_norm(g, p) == Catch::Approx(lp_norm(gr, p)).margin(1e-12));

  // P_r sorted descending is the angle-doubled profile P_r(theta/2), up to one
  // grid step
  const std::size_t n = 4096;
  const real_fn kernel = poisson_kernel_samples(0.6, n);
  const real_fn star = decreasing_rearrangement(kernel);
  double worst = 0.0, step = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double profile = poisson_kernel(0.6, star.theta(k) / 2.0);
    const double profile_next = poisson_kernel(0.6, star.theta(k + 1) / 2.0);
    worst = std::max(worst, std::abs(star[k] - profile));
    step = std::max(step, std::abs(profile_next - profile));
  }
  CHECK(worst <= step + 1e-12);
}

TEST_CASE("integrate_over") {
  const std::size_t n = 512;
  const real_fn one(std::vector<double>(n, 1.0));
  CHECK(integrate_over(one, boundary_set::from_arc(n, 0.0, kPi)) ==
        Catch::Approx(0.5).margin(1e-14));

  xoshiro256 rng(11);
  std::vector<double> fs(n);
  for (double& v : fs) v = rng.uniform(-1.0, 1.0);
  const real_fn f(std::move(fs));
  CHECK(integrate_over(f, boundary_set::full(n)) == Catch::Approx(mean(f)).margin(1e-14));

  // complement identity
  const boundary_set arc = boundary_set::from_arc(n, 1.0, 2.5);
  CHECK(integrate_over(f, arc) + integrate_over(f, arc.complement()) ==
        Catch::Approx(mean(f)).margin(1e-12));
}

TEST_CASE("integrate_over on the cutoff step function") {
  // mass-conserving cell averaging: integrating f_4 - 1 over the support cells
  // equals 1 - measure(S) exactly; 1 - 1/(4 pi) up to the grid resolution
  const std::size_t n = 4096;
  const real_fn f4 = step_fn::cutoff(4).to_circle_fn(n);
  CHECK(mean(f4) == Catch::Approx(1.0).margin(1e-12));

  // S: every cell that touches the arc [-1/4, 1/4]
  const double half_cell = kPi / static_cast<double>(n);
  const boundary_set support =
      boundary_set::from_arc(n, -0.25 - half_cell, 0.25 + half_cell);
  real_fn shifted = f4;
  for (std::size_t k = 0; k < n; ++k) shifted[k] -= 1.0;

  // independent closed form: total mass 1 sits inside S, so the integral is
  // 1 - |S|/N
  std::size_t cells = 0;
  for (std::size_t k = 0; k < n; ++k) cells += support.contains(k) ? 1 : 0;
  const double expected = 1.0 - static_cast<double>(cells) / static_cast<double>(n);
  CHECK(integrate_over(shifted, support) == Catch::Approx(expected).margin(1e-9));
  CHECK(integrate_over(shifted, support) ==
        Catch::Approx(1.0 - 1.0 / (4.0 * kPi)).margin(1e-3));
}

TEST_CASE("young and mean-product inequalities") {
  const std::size_t n = 512;
  xoshiro256 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> fs(n), gs(n);
    for (double& v : fs) v = rng.uniform(-2.0, 2.0);
    for (double& v : gs) v = rng.uniform(-2.0, 2.0);
    const real_fn f(std::move(fs)), g(std::move(gs));
    const real_fn c = convolve(f, g);
    CHECK(lp_norm(c, 1.0) <= lp_norm(f, 1.0) * lp_norm(g, 1.0) * (1.0 + 1e-12));
    CHECK(mean(c) == Catch::Approx(mean(f) * mean(g)).margin(1e-12));
  }
}
