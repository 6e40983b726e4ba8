#include "morsesusy/quadrature.hpp"

#include <numbers>

namespace morsesusy {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) {
    throw DomainError("gauss_legendre: need at least one node");
  }
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes(i) = -x;
    rule.nodes(n - 1 - i) = x;
    rule.weights(i) = w;
    rule.weights(n - 1 - i) = w;
  }
  if (n == 1) {
    rule.nodes(0) = 0.0;
    rule.weights(0) = 2.0;
  }
  return rule;
}

const GaussLegendreRule& gauss_legendre64() {
  static const GaussLegendreRule rule = gauss_legendre(64);
  return rule;
}

}  // namespace morsesusy
