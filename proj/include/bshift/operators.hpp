#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bshift/random.hpp"
#include "bshift/spaces.hpp"

namespace bshift {

// ---------------------------------------------------------------------------
// The operators: B f = (f - f(0)) / z, szop f = f - f(0), szop_r u = u(r .) - u(0).

inline taylor_fn subtract_value(const taylor_fn& f) {
  std::vector<cplx> c = f.coeffs();
  c[0] = 0.0;
  return taylor_fn(std::move(c));
}

inline harmonic_fn subtract_value(const harmonic_fn& u) {
  const double u0 = u.value0();
  std::vector<double> b = u.boundary().samples();
  for (double& x : b) x -= u0;
  return harmonic_fn(real_fn(std::move(b)), u.atoms());
}

inline taylor_fn backward_shift(const taylor_fn& f) {
  const auto& c = f.coeffs();
  if (c.size() == 1) return taylor_fn({cplx(0.0)});
  return taylor_fn(std::vector<cplx>(c.begin() + 1, c.end()));
}

inline taylor_fn multiply_by_z(const taylor_fn& f) {
  std::vector<cplx> c(f.coeffs().size() + 1, 0.0);
  std::copy(f.coeffs().begin(), f.coeffs().end(), c.begin() + 1);
  return taylor_fn(std::move(c));
}

inline real_fn szop_r_apply(const harmonic_fn& u, double r) {
  real_fn out = poisson_extend(u, r);
  const double u0 = u.value0();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= u0;
  return out;
}

// ---------------------------------------------------------------------------
// Space and operator descriptors for ratio evaluation and searches.

enum class op_kind { szop, bshift, szop_r };

struct op_descriptor {
  op_kind kind = op_kind::szop;
  double r = 0.5;  // only for szop_r
};

enum class space_kind { hardy, bergman, harmonic_h1 };

struct space_descriptor {
  space_kind kind = space_kind::hardy;
  double p = 1.0;
  std::optional<radial_weight> weight;  // bergman only

  static space_descriptor hardy(double p) { return {space_kind::hardy, p, std::nullopt}; }
  static space_descriptor h1() { return {space_kind::harmonic_h1, 1.0, std::nullopt}; }
  static space_descriptor bergman(double p, radial_weight w) {
    return {space_kind::bergman, p, std::move(w)};
  }
};

// Rayleigh quotient ||op f|| / ||f||. On the boundary |z| = 1, so B and szop
// have identical Hardy-space ratios.
inline double ratio(op_descriptor op, const taylor_fn& f, const space_descriptor& space,
                    std::size_t n = kDefaultGrid) {
  if (op.kind == op_kind::szop_r)
    throw std::invalid_argument("ratio: szop_r acts on harmonic functions");
  const taylor_fn g = subtract_value(f);
  switch (space.kind) {
    case space_kind::hardy: {
      const double denom = hardy_norm(f, space.p, n);
      if (!(denom > 0.0)) throw std::invalid_argument("ratio: zero-norm input");
      return hardy_norm(g, space.p, n) / denom;
    }
    case space_kind::bergman: {
      if (!space.weight) throw std::invalid_argument("ratio: bergman space needs a weight");
      const double denom = bergman_norm(f, space.p, *space.weight, n);
      if (!(denom > 0.0)) throw std::invalid_argument("ratio: zero-norm input");
      const taylor_fn num = op.kind == op_kind::bshift ? backward_shift(f) : g;
      return bergman_norm(num, space.p, *space.weight, n) / denom;
    }
    case space_kind::harmonic_h1:
      throw std::invalid_argument("ratio: analytic input in a harmonic space");
  }
  throw std::logic_error("ratio: unreachable");
}

inline double ratio(op_descriptor op, const harmonic_fn& u, const space_descriptor& space) {
  const double denom = u.h1_norm();
  if (!(denom > 0.0)) throw std::invalid_argument("ratio: zero-norm input");
  if (op.kind == op_kind::szop_r)
    return lp_norm(szop_r_apply(u, op.r), 1.0) / denom;
  if (space.kind != space_kind::harmonic_h1)
    throw std::invalid_argument("ratio: harmonic input outside h1");
  return subtract_value(u).h1_norm() / denom;
}

// ---------------------------------------------------------------------------
// Exact piecewise-constant boundary functions. The cutoff families are step
// functions whose h^1 quantities have closed-form arc integrals; the grid
// representation cell-averages them (two straddle cells get fractional values)
// so the sampled mean matches the exact mean to roundoff.

class step_fn {
 public:
  struct piece {
    double lo, hi;  // arc [lo, hi) in radians, 0 <= lo < hi <= 2 pi after wrapping
    double value;
  };

  // Pieces must be disjoint; the function is 0 outside them.
  explicit step_fn(std::vector<piece> pieces) : pieces_(std::move(pieces)) {}

  // f_n: height pi*n on [-1/n, 1/n], 0 elsewhere; mean 1.
  static step_fn cutoff(int n) {
    if (n < 1) throw std::invalid_argument("cutoff: need n >= 1");
    const double h = kPi * n;
    return step_fn({{-1.0 / n, 1.0 / n, h}});
  }

  // g_n: -pi*n on [-1/n, 0), +pi*n on [0, 1/n]; mean 0.
  static step_fn alternating_cutoff(int n) {
    if (n < 1) throw std::invalid_argument("alternating_cutoff: need n >= 1");
    const double h = kPi * n;
    return step_fn({{-1.0 / n, 0.0, -h}, {0.0, 1.0 / n, h}});
  }

  double mean() const {
    double acc = 0.0;
    for (const piece& q : pieces_) acc += q.value * (q.hi - q.lo);
    return acc / kTwoPi;
  }

  // (1/2pi) int |f - c| dtheta, exact.
  double l1_dist_to_const(double c) const {
    double acc = 0.0, covered = 0.0;
    for (const piece& q : pieces_) {
      acc += std::abs(q.value - c) * (q.hi - q.lo);
      covered += q.hi - q.lo;
    }
    acc += std::abs(c) * (kTwoPi - covered);
    return acc / kTwoPi;
  }

  // Cell-averaged samples: cell k covers [theta_k - pi/N, theta_k + pi/N).
  real_fn to_circle_fn(std::size_t n) const {
    const double cell = kTwoPi / static_cast<double>(n);
    std::vector<double> s(n, 0.0);
    for (const piece& q : pieces_) {
      for (std::size_t k = 0; k < n; ++k) {
        const double c0 = circle_fn<double>::theta(n, k) - 0.5 * cell;
        const double c1 = c0 + cell;
        double overlap = 0.0;
        for (int shift = -1; shift <= 1; ++shift) {
          const double lo = q.lo + shift * kTwoPi, hi = q.hi + shift * kTwoPi;
          overlap += std::max(0.0, std::min(c1, hi) - std::max(c0, lo));
        }
        s[k] += q.value * overlap / cell;
      }
    }
    return real_fn(std::move(s));
  }

  const std::vector<piece>& pieces() const { return pieces_; }

 private:
  std::vector<piece> pieces_;
};

// Exact ratio ||szop f_n||_{h^1} / ||f_n||_{h^1} = 2 - 2/(pi n).
inline double cutoff_szop_ratio(int n) {
  const step_fn f = step_fn::cutoff(n);
  return f.l1_dist_to_const(f.mean()) / f.l1_dist_to_const(0.0);
}

inline double alternating_cutoff_szop_ratio(int n) {
  const step_fn g = step_fn::alternating_cutoff(n);
  return g.l1_dist_to_const(g.mean()) / g.l1_dist_to_const(0.0);
}

// ---------------------------------------------------------------------------
// Extremal families and the derivative-free lower-bound search.

enum class family_kind { mobius, cutoff, poisson, poly };

struct extremal_family {
  family_kind kind = family_kind::mobius;
  int max_cutoff = 64;    // cutoff: sweep n = 1..max_cutoff
  int poly_degree = 8;    // poly: degree (<= 64)
  double coeff_box = 1.0; // poly: coefficients in [-box, box]^2 per degree

  static extremal_family mobius() { return {family_kind::mobius}; }
  static extremal_family cutoff(int nmax = 64) { return {family_kind::cutoff, nmax}; }
  static extremal_family poisson() { return {family_kind::poisson}; }
  static extremal_family poly(int degree, double box = 1.0) {
    if (degree < 0 || degree > 64) throw std::invalid_argument("poly: degree out of range");
    return {family_kind::poly, 64, degree, box};
  }

  std::string name() const {
    switch (kind) {
      case family_kind::mobius: return "mobius";
      case family_kind::cutoff: return "cutoff";
      case family_kind::poisson: return "poisson";
      case family_kind::poly: return "poly";
    }
    return "?";
  }
};

struct search_report {
  std::string family;
  std::vector<double> best_params;
  double best_ratio = 0.0;
  std::size_t evaluations = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// f_a(z) = (a - z)/(1 - a z): |f_a| = 1 on the boundary, f_a(0) = a.
inline double mobius_ratio(double a, op_descriptor op, const space_descriptor& space,
                           std::size_t n) {
  if (op.kind == op_kind::szop_r || space.kind != space_kind::hardy)
    throw std::invalid_argument("mobius family: Hardy spaces only");
  std::vector<cplx> fs(n), gs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx z = std::polar(1.0, circle_fn<double>::theta(n, k));
    const cplx f = (a - z) / (1.0 - a * z);
    fs[k] = f;
    gs[k] = f - a;
  }
  return lp_norm(complex_fn(std::move(gs)), space.p) /
         lp_norm(complex_fn(std::move(fs)), space.p);
}

inline double poisson_family_ratio(double r_atom, op_descriptor op,
                                   const space_descriptor& space, std::size_t n) {
  if (space.kind != space_kind::harmonic_h1 || op.kind == op_kind::bshift)
    throw std::invalid_argument("poisson family: szop on h1 only");
  const harmonic_fn u(poisson_kernel_samples(r_atom, n));
  return ratio(op, u, space);
}

inline double poly_ratio(const std::vector<double>& params, op_descriptor op,
                         const space_descriptor& space, std::size_t n) {
  std::vector<cplx> c(params.size() / 2);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = cplx(params[2 * k], params[2 * k + 1]);
  const taylor_fn f{std::move(c)};
  if (hardy_norm(f, 2.0, 64) < 1e-12) return 0.0;  // degenerate corner of the box
  return ratio(op, f, space, n);
}

}  // namespace detail

inline double family_ratio(const extremal_family& family, const std::vector<double>& params,
                           op_descriptor op, const space_descriptor& space,
                           std::size_t n = kDefaultGrid) {
  switch (family.kind) {
    case family_kind::mobius:
      return detail::mobius_ratio(params.at(0), op, space, n);
    case family_kind::cutoff: {
      if (space.kind != space_kind::harmonic_h1)
        throw std::invalid_argument("cutoff family: h1 only");
      const int m = static_cast<int>(params.at(0));
      return op.kind == op_kind::szop_r
                 ? ratio(op, harmonic_fn(step_fn::cutoff(m).to_circle_fn(n)), space)
                 : cutoff_szop_ratio(m);
    }
    case family_kind::poisson:
      return detail::poisson_family_ratio(params.at(0), op, space, n);
    case family_kind::poly:
      return detail::poly_ratio(params, op, space, n);
  }
  throw std::logic_error("family_ratio: unreachable");
}

// Coordinate search with geometric step shrinkage (factor 0.5, 8 seeded
// restarts) for continuous parameters; exhaustive sweep for the discrete
// cutoff index. Deterministic for fixed (seed, budget): candidates are
// evaluated in a fixed order and ties break toward the earlier candidate.
inline search_report search_lower_bound(op_descriptor op, const space_descriptor& space,
                                        const extremal_family& family, std::size_t budget,
                                        std::uint64_t seed, std::size_t n = kDefaultGrid) {
  if (budget < 1) throw std::invalid_argument("search_lower_bound: need budget >= 1");
  search_report report;
  report.family = family.name();
  report.seed = seed;

  auto evaluate = [&](const std::vector<double>& params) -> double {
    ++report.evaluations;
    double value = 0.0;
    try {
      value = family_ratio(family, params, op, space, n);
    } catch (const std::invalid_argument&) {
      return -1.0;  // outside the family's domain
    }
    if (value > report.best_ratio) {
      report.best_ratio = value;
      report.best_params = params;
    }
    return value;
  };

  if (family.kind == family_kind::cutoff) {
    const int hi = std::min<std::size_t>(family.max_cutoff, budget);
    for (int m = 1; m <= hi; ++m) evaluate({static_cast<double>(m)});
    return report;
  }

  std::size_t dim;
  double lo, hi;
  if (family.kind == family_kind::poly) {
    dim = 2 * (static_cast<std::size_t>(family.poly_degree) + 1);
    lo = -family.coeff_box;
    hi = family.coeff_box;
  } else {
    dim = 1;
    lo = 1e-6;
    hi = 1.0 - 1e-6;
  }

  xoshiro256 rng(derive_seed(seed, "search", static_cast<std::uint64_t>(family.kind)));
  const std::size_t restarts = 8;
  for (std::size_t restart = 0; restart < restarts && report.evaluations < budget; ++restart) {
    std::vector<double> here(dim);
    for (double& v : here) v = rng.uniform(lo, hi);
    double best_here = evaluate(here);
    double step = 0.25 * (hi - lo);
    while (step > 1e-9 && report.evaluations < budget) {
      bool improved = false;
      for (std::size_t d = 0; d < dim && report.evaluations < budget; ++d) {
        for (double dir : {+1.0, -1.0}) {
          if (report.evaluations >= budget) break;
          std::vector<double> y = here;
          y[d] = std::clamp(y[d] + dir * step, lo, hi);
          const double value = evaluate(y);
          if (value > best_here) {
            best_here = value;
            here = y;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
  }
  return report;
}

}  // namespace bshift
