#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bshift/fft.hpp"

namespace bshift {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr std::size_t kDefaultGrid = 4096;

namespace detail {
inline bool finite(double x) { return std::isfinite(x); }
inline bool finite(const cplx& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}
}  // namespace detail

// Boundary function on the unit circle: N uniform samples at theta_k = 2 pi k / N.
// All integrals and norms use the normalized measure dtheta / 2 pi, i.e. weight
// 1/N per sample, so a unit-mass kernel has mean() == 1 and f * 1 == mean(f).
template <typename T>
class circle_fn {
 public:
  explicit circle_fn(std::vector<T> samples) : s_(std::move(samples)) {
    if (s_.size() < 2) throw std::invalid_argument("circle_fn: need N >= 2");
    for (const T& v : s_)
      if (!detail::finite(v)) throw std::invalid_argument("circle_fn: non-finite sample");
  }

  static circle_fn sampled(std::size_t n, const std::function<T(double)>& f) {
    std::vector<T> s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = f(theta(n, k));
    return circle_fn(std::move(s));
  }

  static double theta(std::size_t n, std::size_t k) {
    return kTwoPi * static_cast<double>(k) / static_cast<double>(n);
  }

  std::size_t size() const { return s_.size(); }
  double theta(std::size_t k) const { return theta(s_.size(), k); }
  const T& operator[](std::size_t k) const { return s_[k]; }
  T& operator[](std::size_t k) { return s_[k]; }
  const std::vector<T>& samples() const { return s_; }

 private:
  std::vector<T> s_;
};

using real_fn = circle_fn<double>;
using complex_fn = circle_fn<cplx>;

// Subset of the circle as a sample mask; measure(mask) = |mask| / N.
class boundary_set {
 public:
  explicit boundary_set(std::vector<std::uint8_t> mask) : mask_(std::move(mask)) {
    if (mask_.size() < 2) throw std::invalid_argument("boundary_set: need N >= 2");
  }

  // Cells whose sample angle lies in [lo, hi) modulo 2 pi; hi - lo >= 2 pi is the
  // full circle.
  static boundary_set from_arc(std::size_t n, double lo, double hi) {
    std::vector<std::uint8_t> mask(n, 0);
    if (hi - lo >= kTwoPi) {
      std::fill(mask.begin(), mask.end(), 1);
      return boundary_set(std::move(mask));
    }
    auto wrap = [](double x) {
      double y = std::fmod(x, kTwoPi);
      return y < 0 ? y + kTwoPi : y;
    };
    const double a = wrap(lo), len = hi - lo;
    for (std::size_t k = 0; k < n; ++k) {
      const double t = circle_fn<double>::theta(n, k);
      double d = t - a;
      if (d < 0) d += kTwoPi;
      if (d < len) mask[k] = 1;
    }
    return boundary_set(std::move(mask));
  }

  static boundary_set full(std::size_t n) {
    return boundary_set(std::vector<std::uint8_t>(n, 1));
  }

  boundary_set complement() const {
    std::vector<std::uint8_t> m(mask_.size());
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = mask_[k] ? 0 : 1;
    return boundary_set(std::move(m));
  }

  double measure() const {
    std::size_t c = 0;
    for (auto b : mask_) c += b;
    return static_cast<double>(c) / static_cast<double>(mask_.size());
  }

  std::size_t size() const { return mask_.size(); }
  bool contains(std::size_t k) const { return mask_[k] != 0; }
  std::vector<std::uint8_t>& mask() { return mask_; }
  const std::vector<std::uint8_t>& mask() const { return mask_; }

 private:
  std::vector<std::uint8_t> mask_;
};

template <typename T>
T mean(const circle_fn<T>& f) {
  T acc{};
  for (std::size_t k = 0; k < f.size(); ++k) acc += f[k];
  return acc / static_cast<double>(f.size());
}

// M_p restricted to the sample grid: ((1/N) sum |f_k|^p)^{1/p}; sup norm at p = inf.
template <typename T>
double lp_norm(const circle_fn<T>& f, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: need p > 0");
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) m = std::max(m, std::abs(f[k]));
    return m;
  }
  double acc = 0.0;
  if (p == 1.0) {
    for (std::size_t k = 0; k < f.size(); ++k) acc += std::abs(f[k]);
  } else if (p == 2.0) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      const double a = std::abs(f[k]);
      acc += a * a;
    }
  } else {
    for (std::size_t k = 0; k < f.size(); ++k) acc += std::pow(std::abs(f[k]), p);
  }
  acc /= static_cast<double>(f.size());
  return p == 1.0 ? acc : (p == 2.0 ? std::sqrt(acc) : std::pow(acc, 1.0 / p));
}

namespace detail {
template <typename T>
std::vector<cplx> to_complex(const circle_fn<T>& f) {
  std::vector<cplx> v(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) v[k] = f[k];
  return v;
}
}  // namespace detail

// (f*g)(theta_j) = (1/N) sum_k f_k g_{(j-k) mod N}; exact cyclic convolution of
// the sampled step functions, so f * 1 = mean(f).
inline complex_fn convolve(const complex_fn& f, const complex_fn& g) {
  if (f.size() != g.size()) throw std::invalid_argument("convolve: mismatched N");
  return complex_fn(detail::cyclic_convolve(f.samples(), g.samples()));
}

inline real_fn convolve(const real_fn& f, const real_fn& g) {
  if (f.size() != g.size()) throw std::invalid_argument("convolve: mismatched N");
  auto c = detail::cyclic_convolve(detail::to_complex(f), detail::to_complex(g));
  std::vector<double> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[k] = c[k].real();
  return real_fn(std::move(out));
}

// Non-increasing equimeasurable rearrangement (real input by contract; complex
// input is rejected at compile time since only the real overload exists).
inline real_fn decreasing_rearrangement(const real_fn& f) {
  std::vector<double> s = f.samples();
  std::sort(s.begin(), s.end(), std::greater<double>());
  return real_fn(std::move(s));
}

template <typename T>
T integrate_over(const circle_fn<T>& f, const boundary_set& set) {
  if (f.size() != set.size()) throw std::invalid_argument("integrate_over: mismatched N");
  T acc{};
  for (std::size_t k = 0; k < f.size(); ++k)
    if (set.contains(k)) acc += f[k];
  return acc / static_cast<double>(f.size());
}

}  // namespace bshift
