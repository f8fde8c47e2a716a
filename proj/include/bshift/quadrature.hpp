#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace bshift {

struct quadrature_rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule mapped to (0, 1). Nodes stay strictly inside the open
// interval, so integrands that blow up at r = 1 are never touched there.
inline quadrature_rule gauss_legendre01(std::size_t n) {
  quadrature_rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double pi = 3.141592653589793238462643383279502884;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(x) and P'_n(x)
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // map [-1,1] -> [0,1]
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[i] = 0.5 * w;
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

// Composite Simpson on [a, b] with n subintervals (n rounded up to even).
template <typename F>
double simpson(F&& f, double a, double b, std::size_t n) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / static_cast<double>(n);
  double acc = f(a) + f(b);
  for (std::size_t i = 1; i < n; ++i)
    acc += f(a + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace bshift
