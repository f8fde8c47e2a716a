#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bshift/circle.hpp"
#include "bshift/quadrature.hpp"

namespace bshift {

// Analytic function as a finite Taylor coefficient vector a_0..a_M.
class taylor_fn {
 public:
  explicit taylor_fn(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(0.0);
    for (const cplx& a : c_)
      if (!detail::finite(a)) throw std::invalid_argument("taylor_fn: non-finite coefficient");
  }

  std::size_t degree() const { return c_.size() - 1; }
  const std::vector<cplx>& coeffs() const { return c_; }
  cplx value0() const { return c_[0]; }

  cplx eval(cplx z) const {
    cplx acc = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
  }

  // Samples on the circle of radius r; r = 1 gives the boundary function.
  complex_fn radius_samples(double r, std::size_t n = kDefaultGrid) const {
    std::vector<cplx> s(n);
    for (std::size_t k = 0; k < n; ++k)
      s[k] = eval(std::polar(r, circle_fn<double>::theta(n, k)));
    return complex_fn(std::move(s));
  }

 private:
  std::vector<cplx> c_;
};

// Harmonic function: Poisson extension of real boundary samples plus finitely
// many point atoms (weight * Poisson kernel at the given angle). The h^1 norm
// is the total variation of the boundary measure.
class harmonic_fn {
 public:
  struct atom {
    double weight;
    double angle;
  };

  harmonic_fn(real_fn boundary, std::vector<atom> atoms = {})
      : boundary_(std::move(boundary)), atoms_(std::move(atoms)) {}

  static harmonic_fn point_mass(double weight, double angle, std::size_t n = kDefaultGrid) {
    return harmonic_fn(real_fn(std::vector<double>(n, 0.0)), {{weight, angle}});
  }

  const real_fn& boundary() const { return boundary_; }
  const std::vector<atom>& atoms() const { return atoms_; }
  std::size_t grid() const { return boundary_.size(); }

  double value0() const {
    double v = mean(boundary_);
    for (const atom& a : atoms_) v += a.weight;
    return v;
  }

  double h1_norm() const {
    double v = lp_norm(boundary_, 1.0);
    for (const atom& a : atoms_) v += std::abs(a.weight);
    return v;
  }

 private:
  real_fn boundary_;
  std::vector<atom> atoms_;
};

// P_r(e^{it}) = (1 - r^2) / (1 - 2 r cos t + r^2); unit mass, strictly positive.
inline double poisson_kernel(double r, double t) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("poisson_kernel: need 0 <= r < 1");
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(t) + r * r);
}

inline real_fn poisson_kernel_samples(double r, std::size_t n, double center = 0.0) {
  return real_fn::sampled(n, [&](double t) { return poisson_kernel(r, t - center); });
}

// u restricted to the circle of radius r: P_r * boundary plus the atom kernels.
inline real_fn poisson_extend(const harmonic_fn& u, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("poisson_extend: need r < 1");
  const std::size_t n = u.grid();
  real_fn out = convolve(poisson_kernel_samples(r, n), u.boundary());
  for (const auto& a : u.atoms())
    for (std::size_t k = 0; k < n; ++k)
      out[k] += a.weight * poisson_kernel(r, out.theta(k) - a.angle);
  return out;
}

struct integral_mean_params {
  double r;
  double p;
};

// M_p(r, f) = ((1/2pi) int |f(r e^{i theta})|^p dtheta)^{1/p} on the sample grid.
inline double integral_mean(const taylor_fn& f, integral_mean_params mp,
                            std::size_t n = kDefaultGrid) {
  if (!(mp.p > 0.0)) throw std::invalid_argument("integral_mean: need p > 0");
  if (!(mp.r >= 0.0 && mp.r <= 1.0)) throw std::invalid_argument("integral_mean: need 0 <= r <= 1");
  return lp_norm(f.radius_samples(mp.r, n), mp.p);
}

inline double integral_mean(const harmonic_fn& u, integral_mean_params mp) {
  if (!(mp.p > 0.0)) throw std::invalid_argument("integral_mean: need p > 0");
  if (mp.r == 1.0) {
    if (mp.p != 1.0)
      throw std::invalid_argument("integral_mean: harmonic boundary means only for p = 1");
    return u.h1_norm();
  }
  return lp_norm(poisson_extend(u, mp.r), mp.p);
}

// ||f||_{H^p} = sup_r M_p(r, f); the means increase in r, so a polynomial's
// norm is its boundary mean.
inline double hardy_norm(const taylor_fn& f, double p, std::size_t n = kDefaultGrid) {
  return integral_mean(f, {1.0, p}, n);
}

// Radial weight r -> w(r) >= 0 on [0, 1) defining A^p(mu); carries its own
// quadrature nodes. w == 1 gives the normalized-area Bergman space.
class radial_weight {
 public:
  radial_weight(std::function<double(double)> w, bool monotone_increasing,
                std::size_t nodes = 512)
      : w_(std::move(w)), increasing_(monotone_increasing), rule_(gauss_legendre01(nodes)) {
    mass_ = 0.0;
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      const double r = rule_.nodes[i];
      const double v = w_(r);
      if (!(v >= 0.0)) throw std::invalid_argument("radial_weight: need w >= 0");
      mass_ += 2.0 * r * v * rule_.weights[i];
    }
    if (!std::isfinite(mass_)) throw std::invalid_argument("radial_weight: infinite mass");
  }

  static radial_weight lebesgue(std::size_t nodes = 512) {
    return radial_weight([](double) { return 1.0; }, true, nodes);
  }

  static radial_weight power(double exponent, std::size_t nodes = 512) {
    return radial_weight([exponent](double r) { return std::pow(r, exponent); },
                         exponent >= 0.0, nodes);
  }

  double operator()(double r) const { return w_(r); }
  bool increasing() const { return increasing_; }
  double mass() const { return mass_; }
  const quadrature_rule& rule() const { return rule_; }

 private:
  std::function<double(double)> w_;
  bool increasing_;
  quadrature_rule rule_;
  double mass_ = 0.0;
};

// ||f||_{A^p(mu)}^p = int_0^1 M_p^p(r, f) 2r w(r) dr.
template <typename Fn>
double bergman_norm(const Fn& f, double p, const radial_weight& w,
                    std::size_t n = kDefaultGrid) {
  if (std::isinf(p)) throw std::invalid_argument("bergman_norm: p = inf not defined");
  if (!(p > 0.0)) throw std::invalid_argument("bergman_norm: need p > 0");
  const auto& rule = w.rule();
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    double m;
    if constexpr (std::is_same_v<Fn, taylor_fn>)
      m = integral_mean(f, {r, p}, n);
    else
      m = integral_mean(f, {r, p});
    acc += std::pow(m, p) * 2.0 * r * w(r) * rule.weights[i];
  }
  return std::pow(acc, 1.0 / p);
}

namespace detail {
inline void require_positive(const real_fn& psi) {
  for (std::size_t k = 0; k < psi.size(); ++k)
    if (!(psi[k] > 0.0))
      throw std::invalid_argument("outer_function: boundary modulus must be strictly positive");
}
inline double outer_radius_cap(std::size_t n) {
  return 1.0 - 16.0 / static_cast<double>(n);
}
}  // namespace detail

// Outer function from a prescribed boundary modulus:
//   F(z) = exp{ (1/2pi) int (e^{it} + z) / (e^{it} - z) log psi(t) dt }.
// Discretized over the sample grid; |F(0)| = exp(mean(log psi)) exactly.
// Evaluation radius is capped at 1 - 16/N so the kernel stays grid-resolved.
inline cplx outer_function(const real_fn& psi, cplx z) {
  detail::require_positive(psi);
  const std::size_t n = psi.size();
  if (std::abs(z) > detail::outer_radius_cap(n) + 1e-15)
    throw std::domain_error("outer_function: |z| exceeds the 1 - 16/N evaluation cap");
  cplx acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx e = std::polar(1.0, psi.theta(k));
    acc += (e + z) / (e - z) * std::log(psi[k]);
  }
  return std::exp(acc / static_cast<double>(n));
}

// Same discrete Herglotz sum evaluated at every grid angle of the circle of
// radius rho at once. The geometric tail over aliased frequencies is summed in
// closed form, so this matches outer_function pointwise to roundoff.
inline complex_fn outer_boundary_samples(const real_fn& psi, double rho) {
  detail::require_positive(psi);
  const std::size_t n = psi.size();
  if (!(rho >= 0.0) || rho > detail::outer_radius_cap(n) + 1e-15)
    throw std::domain_error("outer_boundary_samples: rho exceeds the 1 - 16/N cap");
  if (!detail::is_power_of_two(n)) {
    std::vector<cplx> s(n);
    for (std::size_t j = 0; j < n; ++j)
      s[j] = outer_function(psi, std::polar(rho, psi.theta(j)));
    return complex_fn(std::move(s));
  }
  std::vector<cplx> spectrum(n);
  for (std::size_t k = 0; k < n; ++k) spectrum[k] = std::log(psi[k]);
  detail::fft_radix2(spectrum, false);
  const double tail = std::pow(rho, static_cast<double>(n));
  const double geom = 1.0 / (1.0 - tail);
  std::vector<cplx> coef(n);
  coef[0] = spectrum[0] / static_cast<double>(n) * (1.0 + 2.0 * tail * geom);
  double rpow = 1.0;
  for (std::size_t m = 1; m < n; ++m) {
    rpow *= rho;
    coef[m] = 2.0 * spectrum[m] / static_cast<double>(n) * rpow * geom;
  }
  detail::fft_radix2(coef, true);  // unnormalized inverse: sum_m coef_m e^{i m theta_j}
  for (std::size_t j = 0; j < n; ++j) coef[j] = std::exp(coef[j]);
  return complex_fn(std::move(coef));
}

// Harmonic measure at the point r of the boundary arc [e^{i gamma}, e^{i delta}]:
// phi/pi - (delta - gamma)/(2 pi), phi the angle the arc subtends at r.
inline double harmonic_measure_arc(double r, double gamma, double delta) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("harmonic_measure_arc: need r < 1");
  if (!(gamma < delta && delta <= gamma + kTwoPi + 1e-12))
    throw std::invalid_argument("harmonic_measure_arc: need gamma < delta <= gamma + 2 pi");
  const double len = delta - gamma;
  if (len >= kTwoPi - 1e-15) return 1.0;
  const cplx w1 = std::polar(1.0, gamma) - r;
  const cplx w2 = std::polar(1.0, delta) - r;
  double phi = std::arg(w2) - std::arg(w1);
  if (phi < 0.0) phi += kTwoPi;
  return phi / kPi - len / kTwoPi;
}

// u_s(z) = u(s z).
inline taylor_fn dilate(const taylor_fn& f, double s) {
  if (!(s >= 0.0 && s < 1.0)) throw std::invalid_argument("dilate: need 0 <= s < 1");
  std::vector<cplx> c = f.coeffs();
  double sp = 1.0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    sp *= s;
    c[k] *= sp;
  }
  return taylor_fn(std::move(c));
}

// Dilation folds the atoms into the absolutely continuous part: the boundary of
// u_s is u on the circle of radius s.
inline harmonic_fn dilate(const harmonic_fn& u, double s) {
  if (!(s >= 0.0 && s < 1.0)) throw std::invalid_argument("dilate: need 0 <= s < 1");
  return harmonic_fn(poisson_extend(u, s));
}

}  // namespace bshift
