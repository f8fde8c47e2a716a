#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bshift/certificate.hpp"
#include "bshift/circle.hpp"

namespace bshift {

// int |f - mu| dnu = 2 int_{f > mu} (f - mu) dnu for mu = the nu-average of f,
// with nu the normalized grid measure. Both sides returned from independent
// accumulations; they agree to roundoff.
inline std::pair<double, double> half_mass_identity(const real_fn& f) {
  const double mu = mean(f);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    lhs += std::abs(f[k] - mu);
    if (f[k] > mu) rhs += f[k] - mu;
  }
  const double n = static_cast<double>(f.size());
  return {lhs / n, 2.0 * rhs / n};
}

// m x n matrix with threshold mu; D = sum_j max(C_j - mu, 0) over column sums.
struct deficiency_matrix {
  std::vector<std::vector<double>> entries;  // rows
  double mu = 0.0;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
};

inline double column_sum(const deficiency_matrix& a, std::size_t j) {
  double c = 0.0;
  for (const auto& row : a.entries) c += row[j];
  return c;
}

inline double deficiency(const deficiency_matrix& a) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j)
    d += std::max(column_sum(a, j) - a.mu, 0.0);
  return d;
}

// Interchange a_{ij} and a_{ik} under the exchange hypothesis D_j >= D_k,
// a_{ij} <= a_{ik}; the deficiency never decreases. Indices are 0-based.
inline deficiency_matrix exchange_step(deficiency_matrix a, std::size_t i, std::size_t j,
                                       std::size_t k) {
  if (i >= a.rows() || j >= a.cols() || k >= a.cols())
    throw std::out_of_range("exchange_step: index out of range");
  const double dj = std::max(column_sum(a, j) - a.mu, 0.0);
  const double dk = std::max(column_sum(a, k) - a.mu, 0.0);
  if (!(dj >= dk && a.entries[i][j] <= a.entries[i][k]))
    throw std::invalid_argument("exchange_step: hypothesis D_j >= D_k, a_ij <= a_ik violated at (i=" +
                                std::to_string(i) + ", j=" + std::to_string(j) +
                                ", k=" + std::to_string(k) + ")");
  std::swap(a.entries[i][j], a.entries[i][k]);
  return a;
}

inline deficiency_matrix sort_rows_descending(deficiency_matrix a) {
  for (auto& row : a.entries)
    std::sort(row.begin(), row.end(), std::greater<double>());
  return a;
}

// Q = a P*(x) - b P*(reflected x) with a + b = 1; the reflection is index
// reversal (the exact discrete instance of x -> alpha + beta - x).
struct tilted_rearrangement {
  real_fn base;  // the decreasing rearrangement P*
  double a = 0.5;
  double b = 0.5;

  tilted_rearrangement(real_fn rearranged, double pos, double neg)
      : base(std::move(rearranged)), a(pos), b(neg) {
    if (std::abs(a + b - 1.0) > 1e-12)
      throw std::invalid_argument("tilted_rearrangement: need a + b = 1");
  }

  real_fn q() const {
    const std::size_t n = base.size();
    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = a * base[j] - b * base[n - 1 - j];
    return real_fn(std::move(s));
  }
};

// ||P * f - mean||_1 against the rearranged comparison function. Nonnegative f:
// rhs = ||P - mean(P)||_1. Signed f: rhs = ||Q - mean(Q)||_1 with
// Q = a P*(x) - b P*(rev x), a/b the positive/negative mass of f. f is
// rescaled to unit L^1 norm; both bounds are exact for the discrete objects.
inline bound_certificate conv_rearrangement_check(const real_fn& p, const real_fn& f,
                                                  bool strict_nonneg, double tol = 1e-9) {
  if (p.size() != f.size()) throw std::invalid_argument("conv_rearrangement_check: mismatched N");
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] < 0.0) throw std::invalid_argument("conv_rearrangement_check: P must be nonnegative");
  const double fnorm = lp_norm(f, 1.0);
  if (!(fnorm > 0.0)) throw std::invalid_argument("conv_rearrangement_check: zero-norm f");
  std::vector<double> fs = f.samples();
  double a = 0.0, b = 0.0;
  for (double& x : fs) {
    x /= fnorm;
    if (strict_nonneg && x < 0.0)
      throw std::invalid_argument("conv_rearrangement_check: negative f in nonnegative mode");
    (x > 0.0 ? a : b) += std::abs(x);
  }
  const std::size_t n = p.size();
  a /= static_cast<double>(n);
  b /= static_cast<double>(n);
  const real_fn fu(std::move(fs));
  const real_fn pf = convolve(p, fu);
  const double mpf = mean(pf);
  double lhs = 0.0;
  for (std::size_t k = 0; k < n; ++k) lhs += std::abs(pf[k] - mpf);
  lhs /= static_cast<double>(n);

  double rhs;
  if (strict_nonneg) {
    const double mp = mean(p);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += std::abs(p[k] - mp);
    rhs = acc / static_cast<double>(n);
  } else {
    const tilted_rearrangement tilt(decreasing_rearrangement(p), a, b);
    const real_fn q = tilt.q();
    const double mq = mean(q);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += std::abs(q[k] - mq);
    rhs = acc / static_cast<double>(n);
  }
  return make_certificate(strict_nonneg ? "conv-rearrangement-nonneg" : "conv-rearrangement-signed",
                          {{"a", a}, {"b", b}, {"n", static_cast<double>(n)}},
                          lhs, rhs, relation::le, tol);
}

// ---------------------------------------------------------------------------
// Interval profiles: a decreasing function sampled at the midpoints
// x_k = (k + 1/2) L / N of [0, L]; reflection x -> L - x is index reversal.

namespace detail {

inline double profile_interp(const std::vector<double>& s, double length, double x) {
  const std::size_t n = s.size();
  const double h = length / static_cast<double>(n);
  const double t = x / h - 0.5;
  if (t <= 0.0) return s.front();
  if (t >= static_cast<double>(n - 1)) return s.back();
  const std::size_t k = static_cast<std::size_t>(t);
  const double frac = t - static_cast<double>(k);
  return s[k] * (1.0 - frac) + s[k + 1] * frac;
}

// Exact integral of the cell-constant profile over [0, x].
inline double profile_integral_prefix(const std::vector<double>& s, double length, double x) {
  const std::size_t n = s.size();
  const double h = length / static_cast<double>(n);
  x = std::clamp(x, 0.0, length);
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lo = h * static_cast<double>(k);
    if (lo >= x) break;
    acc += s[k] * (std::min(x, lo + h) - lo);
  }
  return acc;
}

}  // namespace detail

// Solves a P(c) - b P(L - c) = a - b by bisection on the strictly decreasing
// interpolant; c returned in [0, L] to absolute tolerance 1e-12.
inline double find_c(const std::vector<double>& profile, double length, double a, double b) {
  if (profile.size() < 2) throw std::invalid_argument("find_c: need at least 2 samples");
  if (!(a >= 0.0 && b >= 0.0 && std::abs(a + b - 1.0) <= 1e-12))
    throw std::invalid_argument("find_c: need a, b >= 0 with a + b = 1");
  auto h = [&](double c) {
    return a * detail::profile_interp(profile, length, c) -
           b * detail::profile_interp(profile, length, length - c) - (a - b);
  };
  double lo = 0.0, hi = length;
  double hlo = h(lo), hhi = h(hi);
  if (hlo < 0.0 || hhi > 0.0) {
    if (std::abs(hlo) < 1e-12) return lo;
    if (std::abs(hhi) < 1e-12) return hi;
    throw std::runtime_error("find_c: no sign change (profile not decreasing with mean 1?)");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) >= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// P decreasing, nonnegative, average 1 on [0, L]. Computes c, checks the
// hypothesis int_0^c P + int_{L-c}^L P >= 2c (raw and normalized values both
// recorded), and when it holds certifies ||P - mean||_1 >= ||Q - mean(Q)||_1
// with Q = a P(x) - b P(L - x). When the hypothesis fails the certificate
// records that without asserting the conclusion.
inline bound_certificate pq_comparison_check(const std::vector<double>& profile, double length,
                                             double a, double b, double tol = 1e-9) {
  const std::size_t n = profile.size();
  for (double v : profile)
    if (!(v >= 0.0)) throw std::invalid_argument("pq_comparison_check: P must be nonnegative");
  const double c = find_c(profile, length, a, b);
  const double head = detail::profile_integral_prefix(profile, length, c);
  double tail = 0.0;
  {
    std::vector<double> rev(profile.rbegin(), profile.rend());
    tail = detail::profile_integral_prefix(rev, length, c);
  }
  const double hyp_raw = head + tail;
  const bool hypothesis = hyp_raw >= 2.0 * c - 1e-12;

  double mean_p = 0.0;
  for (double v : profile) mean_p += v;
  mean_p /= static_cast<double>(n);
  double lhs = 0.0, rhs = 0.0;
  const double mu = a - b;  // mean of Q for an average-1 profile
  for (std::size_t k = 0; k < n; ++k) {
    lhs += std::abs(profile[k] - mean_p);
    rhs += std::abs(a * profile[k] - b * profile[n - 1 - k] - mu * mean_p);
  }
  lhs /= static_cast<double>(n);
  rhs /= static_cast<double>(n);

  auto cert = make_certificate("pq-comparison",
                               {{"a", a},
                                {"b", b},
                                {"c", c},
                                {"hypothesis_raw", hyp_raw},
                                {"hypothesis_normalized", hyp_raw / length},
                                {"hypothesis_bound", 2.0 * c},
                                {"hypothesis_satisfied", hypothesis ? 1.0 : 0.0}},
                               lhs, rhs, relation::ge, tol);
  if (!hypothesis) cert.pass = true;  // nothing asserted without the hypothesis
  return cert;
}

}  // namespace bshift
