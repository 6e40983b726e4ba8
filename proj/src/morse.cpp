#include "morsesusy/morse.hpp"

#include <algorithm>
#include <cmath>

namespace morsesusy {

double depth_factor(const MorseParams& p, double n) {
  const double f = n + p.sigma();
  return std::abs(f) <= 1e-12 * std::max(1.0, std::abs(n)) ? 0.0 : f;
}

CoefficientPair h_tilde_coefficients(const MorseParams& p, Index n) {
  if (n < 0) throw DomainError("h_tilde_coefficients: negative index");
  const double nn = static_cast<double>(n);
  const double f = depth_factor(p, nn);
  const double u = p.energy_unit();
  CoefficientPair out;
  out.a = u * (f * f + nn * (nn + 2.0 * p.gamma) - p.D * p.D);
  out.b = -u * std::sqrt((nn + 1.0) * (nn + 2.0 * p.gamma + 1.0)) * f;
  return out;
}

TridiagonalOperator unshifted_operator(const MorseParams& p) {
  return {[p](Index n) { return h_tilde_coefficients(p, n).a; },
          [p](Index n) { return h_tilde_coefficients(p, n).b; }};
}

TridiagonalOperator shifted_operator(const MorseParams& p) {
  // a_n written as a sum of squares rather than a~_n + shift, so that a_n >= 0 holds exactly.
  return {[p](Index n) {
            if (n < 0) throw DomainError("shifted_operator: negative index");
            const double nn = static_cast<double>(n);
            const double f = depth_factor(p, nn);
            return p.energy_unit() * (f * f + nn * (nn + 2.0 * p.gamma));
          },
          [p](Index n) { return h_tilde_coefficients(p, n).b; }};
}

}  // namespace morsesusy
