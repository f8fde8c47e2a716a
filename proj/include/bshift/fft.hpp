#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace bshift::detail {

using cplx = std::complex<double>;

inline bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 transform. Forward: X_m = sum_k x_k e^{-2pi i km/N}.
// Inverse is unnormalized (caller divides by N where needed).
inline void fft_radix2(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * 3.141592653589793238462643383279502884 / static_cast<double>(len);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx w = std::polar(1.0, ang * static_cast<double>(k));
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

// Cyclic convolution with the normalized-measure convention:
// (f*g)_j = (1/N) sum_k f_k g_{(j-k) mod N}.
inline std::vector<cplx> cyclic_convolve(const std::vector<cplx>& f,
                                         const std::vector<cplx>& g) {
  const std::size_t n = f.size();
  std::vector<cplx> out(n);
  if (is_power_of_two(n)) {
    std::vector<cplx> fa = f, ga = g;
    fft_radix2(fa, false);
    fft_radix2(ga, false);
    for (std::size_t m = 0; m < n; ++m) fa[m] *= ga[m];
    fft_radix2(fa, true);
    const double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) out[j] = fa[j] * scale;
  } else {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += f[k] * g[(j + n - k) % n];
      out[j] = acc * inv_n;
    }
  }
  return out;
}

}  // namespace bshift::detail
