#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bshift/certificate.hpp"
#include "bshift/operators.hpp"

namespace bshift {

// ---------------------------------------------------------------------------
// Concentration bounds for H^1 functions.

namespace detail {

// g(gamma; eps) = [log(gamma + eps) - log(1 - 2 eps)] / log(gamma)
inline double thm1_objective(double gamma, double eps) {
  return (std::log(gamma + eps) - std::log(1.0 - 2.0 * eps)) / std::log(gamma);
}

template <typename F>
double golden_max(F&& f, double a, double b, double xtol) {
  const double gr = 0.6180339887498949;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  while (b - a > xtol) {
    if (f(c) > f(d)) b = d;
    else a = c;
    c = b - gr * (b - a);
    d = a + gr * (b - a);
  }
  return 0.5 * (a + b);
}

}  // namespace detail

// If ||f||_{H^1} = 1 and int_A Re f >= 1 - eps with eps < 1/4, then
// m(A) >= max_{0 < gamma < 1} [log(gamma + eps) - log(1 - 2 eps)] / log(gamma).
// The objective is scanned on a 1024-point log-spaced grid and the best bracket
// refined by golden section; the grid guards against multiple local maxima.
inline std::pair<double, double> thm1_maximize(double eps) {
  if (!(eps > 0.0 && eps < 0.25))
    throw std::invalid_argument("thm1_measure_lower_bound: need 0 < eps < 1/4");
  const double lo = 1e-6, hi = 1.0 - 1e-6;
  const std::size_t grid = 1024;
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i <= grid; ++i) {
    const double t = static_cast<double>(i) / grid;
    const double gamma = std::exp(std::log(lo) * (1.0 - t) + std::log(hi) * t);
    const double v = detail::thm1_objective(gamma, eps);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  auto at = [&](std::size_t i) {
    const double t = static_cast<double>(i) / grid;
    return std::exp(std::log(lo) * (1.0 - t) + std::log(hi) * t);
  };
  const double a = at(best_i == 0 ? 0 : best_i - 1);
  const double b = at(best_i == grid ? grid : best_i + 1);
  const double gamma = detail::golden_max(
      [&](double x) { return detail::thm1_objective(x, eps); }, a, b, 1e-10);
  return {detail::thm1_objective(gamma, eps), gamma};
}

inline double thm1_measure_lower_bound(double eps) { return thm1_maximize(eps).first; }

// If ||f||_{H^p} = 1, ||f||_{L^1(E)} >= 1 - eps and m(E) <= delta, then
// |f(0)| <= ((1 - eps)/delta)^delta (eps/(1 - delta))^(1 - delta).
// Stated for 0 < eps, delta < 1/2; evaluated as-is outside that range (the H^1
// backward-shift proof needs it there), so callers should watch the range flag.
inline double thm2_f0_upper_bound(double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0 && delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("thm2_f0_upper_bound: need eps, delta in (0, 1)");
  return std::pow((1.0 - eps) / delta, delta) * std::pow(eps / (1.0 - delta), 1.0 - delta);
}

inline bool thm2_in_stated_range(double eps, double delta) {
  return eps > 0.0 && eps < 0.5 && delta > 0.0 && delta < 0.5;
}

// ---------------------------------------------------------------------------
// Witness verifiers. The paper's 6-digit witnesses sit at the equality
// boundary, so they are certified inside an explicit |lhs - rhs| < 1e-4 band;
// the optimizers below carry the actual acceptance burden.

inline constexpr double kWitnessBand = 1e-4;

// Contradiction for ||szop||_{H^1} <= 2 - alpha: m(A) <= alpha/beta must fall
// below the Thm-1 measure bound at eps = alpha + beta and the given gamma.
inline bound_certificate verify_h1_szop_witness(double alpha, double beta, double gamma,
                                                double band = kWitnessBand) {
  if (!(alpha > 0.0 && beta > 0.0 && alpha + beta < 0.25))
    throw std::invalid_argument("verify_h1_szop_witness: need alpha + beta < 1/4");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("verify_h1_szop_witness: need 0 < gamma < 1");
  const double eps = alpha + beta;
  const double lhs = alpha / beta;
  const double rhs = detail::thm1_objective(gamma, eps);
  return make_certificate("h1-szop-witness",
                          {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"eps", eps}},
                          lhs, rhs, relation::le, band);
}

// Contradiction for ||B||_{H^1} <= 2 - alpha: 1 - alpha must reach the Thm-2
// bound at eps = alpha + beta, delta = alpha/beta (range violation flagged).
inline bound_certificate verify_h1_bshift_witness(double alpha, double beta,
                                                  double band = kWitnessBand) {
  if (!(alpha > 0.0 && beta > alpha && alpha + beta < 1.0))
    throw std::invalid_argument("verify_h1_bshift_witness: need 0 < alpha < beta, alpha + beta < 1");
  const double eps = alpha + beta;
  const double delta = alpha / beta;
  const double lhs = 1.0 - alpha;
  const double rhs = thm2_f0_upper_bound(eps, delta);
  auto cert = make_certificate("h1-bshift-witness",
                               {{"alpha", alpha},
                                {"beta", beta},
                                {"eps", eps},
                                {"delta", delta},
                                {"range_warning", thm2_in_stated_range(eps, delta) ? 0.0 : 1.0}},
                               lhs, rhs, relation::ge, band);
  cert.params["boundary_band"] = std::abs(lhs - rhs) < band ? 1.0 : 0.0;
  return cert;
}

// Contradiction for ||szop||_{a^1} <= 2 - alpha:
//   lhs = ((1-alpha-beta)/beta) (1/(2 sqrt(beta)) log((1+sqrt(beta))/(1-sqrt(beta))) - 1)
//   rhs = alpha / (2 beta),   pass iff lhs > rhs.
inline bound_certificate verify_a1_witness(double alpha, double beta, double tol = 1e-9) {
  if (!(alpha > 0.0 && beta > 0.0 && beta < 1.0 && alpha + beta < 1.0))
    throw std::invalid_argument("verify_a1_witness: need 0 < beta < 1, alpha + beta < 1");
  const double sb = std::sqrt(beta);
  const double lhs = (1.0 - alpha - beta) / beta *
                     (std::log((1.0 + sb) / (1.0 - sb)) / (2.0 * sb) - 1.0);
  const double rhs = alpha / (2.0 * beta);
  auto cert = make_certificate("a1-witness",
                               {{"alpha", alpha},
                                {"beta", beta},
                                {"range_warning", beta < 0.5 ? 0.0 : 1.0}},
                               lhs, rhs, relation::ge, tol);
  return cert;
}

// ---------------------------------------------------------------------------
// Optimizers reproducing the headline constants. Feasibility in alpha behaves
// differently per proof:
//   * szop / a1: the contradiction needs ONE beta, and the feasible alphas form
//     an interval (0, alpha*]; the bound is 2 - alpha* for the largest of them.
//   * bshift: the Thm-2 formula leaves its stated range and degenerates as
//     delta -> 1, so single-beta feasibility is vacuous; the meaningful optimum
//     is the smallest alpha whose contradiction holds for EVERY beta in
//     (alpha, 1/2), i.e. where the non-contradicting beta-window vanishes.
// Grid + local refinement (4 rounds, factor 10) per the 6-digit targets.

struct optimizer_result {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;  // szop only
  double bound = 2.0;
  bound_certificate witness;
};

namespace detail {

inline constexpr double kContradictionTol = 1e-9;

// max over beta on a grid + golden refinement; objective(beta) must be smooth.
template <typename F>
std::pair<double, double> refine_extremum(F&& objective, double lo, double hi,
                                          std::size_t grid, bool maximize) {
  double best = maximize ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
  std::size_t best_i = 1;
  for (std::size_t i = 1; i < grid; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / grid;
    const double v = objective(x);
    if (maximize ? v > best : v < best) {
      best = v;
      best_i = i;
    }
  }
  double a = lo + (hi - lo) * static_cast<double>(best_i - 1) / grid;
  double b = lo + (hi - lo) * static_cast<double>(best_i + 1) / grid;
  auto signed_obj = [&](double x) { return maximize ? objective(x) : -objective(x); };
  const double x = golden_max(signed_obj, a, b, 1e-12);
  return {objective(x), x};
}

}  // namespace detail

// Best (szop, a1) or worst (bshift) contradiction margin over beta at a given
// alpha, with the argmax/argmin beta. Exposed so the boundary-perturbation
// sweeps can re-optimize the inner parameters at alpha +/- delta.
inline std::pair<double, double> h1_szop_best_margin(double alpha) {
  return detail::refine_extremum(
      [&](double b) { return thm1_measure_lower_bound(alpha + b) - alpha / b; },
      1e-6, 0.25 - alpha - 1e-9, 200, true);
}

inline std::pair<double, double> h1_bshift_worst_margin(double alpha) {
  return detail::refine_extremum(
      [&](double b) {
        return (1.0 - alpha) - thm2_f0_upper_bound(alpha + b, alpha / b);
      },
      alpha + 1e-9, 0.5 - 1e-9, 400, false);
}

inline std::pair<double, double> a1_best_margin(double alpha) {
  return detail::refine_extremum(
      [&](double b) {
        const double sb = std::sqrt(b);
        const double lhs = (1.0 - alpha - b) / b *
                           (std::log((1.0 + sb) / (1.0 - sb)) / (2.0 * sb) - 1.0);
        return lhs - alpha / (2.0 * b);
      },
      1e-6, 1.0 - alpha - 1e-9, 200, true);
}

// ||szop||_{H^1} <= 2 - alpha*: alpha* ~ 0.047604, bound ~ 1.952396.
inline optimizer_result optimize_h1_szop() {
  auto best_beta = [&](double alpha) { return h1_szop_best_margin(alpha); };
  // outer grid on alpha, then 4 refinement rounds around the feasibility edge
  double alo = 1e-4, ahi = 0.25 - 1e-4;
  double astar = alo, bstar = 0.0;
  double step = (ahi - alo) / 200.0;
  for (int round = 0; round <= 4; ++round) {
    double best_alpha = -1.0, best_beta_here = 0.0;
    for (double a = alo; a <= ahi + 1e-15; a += step) {
      if (!(a > 0.0 && a < 0.25)) continue;
      auto [m, b] = best_beta(a);
      if (m > detail::kContradictionTol) {
        if (a > best_alpha) {
          best_alpha = a;
          best_beta_here = b;
        }
      }
    }
    if (best_alpha < 0.0) throw std::logic_error("optimize_h1_szop: no feasible alpha");
    astar = best_alpha;
    bstar = best_beta_here;
    alo = std::max(1e-9, astar - step);
    ahi = std::min(0.25 - 1e-9, astar + step);
    step /= 10.0;
  }
  optimizer_result res;
  res.alpha = astar;
  res.beta = bstar;
  res.gamma = thm1_maximize(astar + bstar).second;
  res.bound = 2.0 - astar;
  res.witness = verify_h1_szop_witness(astar, bstar, res.gamma);
  return res;
}

// ||B||_{H^1} <= 2 - alpha*: alpha* ~ 0.295302, bound ~ 1.7047.
inline optimizer_result optimize_h1_bshift() {
  auto worst_beta = [&](double alpha) { return h1_bshift_worst_margin(alpha); };
  double alo = 1e-4, ahi = 0.5 - 1e-4;
  double astar = ahi, bstar = 0.0;
  double step = (ahi - alo) / 200.0;
  for (int round = 0; round <= 4; ++round) {
    double best_alpha = -1.0, best_beta_here = 0.0;
    for (double a = alo; a <= ahi + 1e-15; a += step) {
      if (!(a > 0.0 && a < 0.5)) continue;
      auto [m, b] = worst_beta(a);
      if (m > detail::kContradictionTol) {
        best_alpha = a;  // smallest feasible alpha: stop at the first hit
        best_beta_here = b;
        break;
      }
    }
    if (best_alpha < 0.0) throw std::logic_error("optimize_h1_bshift: no feasible alpha");
    astar = best_alpha;
    bstar = best_beta_here;
    alo = std::max(1e-9, astar - step);
    ahi = std::min(0.5 - 1e-9, astar + step);
    step /= 10.0;
  }
  optimizer_result res;
  res.alpha = astar;
  res.beta = bstar;
  res.bound = 2.0 - astar;
  res.witness = verify_h1_bshift_witness(astar, bstar);
  return res;
}

// ||szop||_{a^1} <= 2 - alpha*: alpha* ~ 0.1651, bound ~ 1.835.
inline optimizer_result optimize_a1() {
  auto best_beta = [&](double alpha) { return a1_best_margin(alpha); };
  double alo = 1e-4, ahi = 1.0 - 1e-4;
  double astar = alo, bstar = 0.0;
  double step = (ahi - alo) / 200.0;
  for (int round = 0; round <= 4; ++round) {
    double best_alpha = -1.0, best_beta_here = 0.0;
    for (double a = alo; a <= ahi + 1e-15; a += step) {
      if (!(a > 0.0 && a < 1.0)) continue;
      auto [m, b] = best_beta(a);
      if (m > detail::kContradictionTol) {
        if (a > best_alpha) {
          best_alpha = a;
          best_beta_here = b;
        }
      }
    }
    if (best_alpha < 0.0) throw std::logic_error("optimize_a1: no feasible alpha");
    astar = best_alpha;
    bstar = best_beta_here;
    alo = std::max(1e-9, astar - step);
    ahi = std::min(1.0 - 1e-9, astar + step);
    step /= 10.0;
  }
  optimizer_result res;
  res.alpha = astar;
  res.beta = bstar;
  res.bound = 2.0 - astar;
  res.witness = verify_a1_witness(astar, bstar);
  return res;
}

// ---------------------------------------------------------------------------
// Closed-form bounds.

// ||B||_{H^p} <= 2^{(2-p)/p} for 1 <= p <= 2 and 2^{(p-2)/p} for 2 <= p <= inf.
inline double interpolation_bound(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("interpolation_bound: need p >= 1");
  if (std::isinf(p)) return 2.0;
  const double e = p <= 2.0 ? (2.0 - p) / p : (p - 2.0) / p;
  return std::pow(2.0, e);
}

// ||szop_r||_{h^1 -> L^1} = 2 - (4/pi) arccos(r).
inline double sharp_szr_constant(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("sharp_szr_constant: need 0 <= r <= 1");
  return 2.0 - 4.0 / kPi * std::acos(r);
}

// Proven upper bound for the (operator, space) pair; searches cross-check
// their lower bounds against this.
inline double proven_upper_bound(op_descriptor op, const space_descriptor& space) {
  if (op.kind == op_kind::szop_r) return sharp_szr_constant(op.r);
  switch (space.kind) {
    case space_kind::harmonic_h1:
      return 2.0;
    case space_kind::hardy:
      if (space.p == 1.0) return op.kind == op_kind::bshift ? 1.7047 : 1.952396;
      return interpolation_bound(space.p);
    case space_kind::bergman: {
      const double hardy_k =
          space.p == 1.0 ? 1.952396 : interpolation_bound(std::max(space.p, 1.0));
      return op.kind == op_kind::bshift ? 2.0 * hardy_k : hardy_k;
    }
  }
  throw std::logic_error("proven_upper_bound: unreachable");
}

// Transfer of the Hardy bound K to A^p(mu): ||szop f||_{A^p(w)} <= K ||f||, and
// for p = 1 with increasing weight additionally ||B f|| <= 2K ||f||.
inline bound_certificate bergman_transfer_check(const taylor_fn& f, double p,
                                                const radial_weight& w, double k,
                                                std::size_t n = kDefaultGrid,
                                                double tol = 1e-9) {
  const double denom = bergman_norm(f, p, w, n);
  if (!(denom > 0.0)) throw std::invalid_argument("bergman_transfer_check: zero-norm f");
  const double lhs = bergman_norm(subtract_value(f), p, w, n);
  auto cert = make_certificate(
      "bergman-transfer", {{"p", p}, {"K", k}, {"norm_f", denom}}, lhs, k * denom,
      relation::le, tol);
  if (p == 1.0 && w.increasing()) {
    const double blhs = bergman_norm(backward_shift(f), 1.0, w, n);
    const double brhs = 2.0 * k * denom;
    cert.params["bshift_lhs"] = blhs;
    cert.params["bshift_rhs"] = brhs;
    cert.pass = cert.pass && blhs <= brhs + tol;
  }
  return cert;
}

}  // namespace bshift
