#include "morsesusy/morse_params.hpp"

#include <cmath>
#include <sstream>

namespace morsesusy {

MorseParams derive_params(double V0, double alpha, double gamma) {
  if (!std::isfinite(V0) || !std::isfinite(alpha) || !std::isfinite(gamma)) {
    throw InvalidParameter("Morse parameters must be finite");
  }
  if (!(V0 > 0.0)) throw InvalidParameter("V0 must be positive");
  if (!(alpha > 0.0)) throw InvalidParameter("alpha must be positive");
  if (!(2.0 * gamma > -1.0)) throw InvalidParameter("gamma must satisfy 2 gamma > -1");
  MorseParams p;
  p.V0 = V0;
  p.alpha = alpha;
  p.gamma = gamma;
  p.D = std::sqrt(2.0 * V0) / alpha - 0.5;
  if (!(p.D > 0.0)) {
    std::ostringstream msg;
    msg << "no bound states: D = " << p.D << " <= 0";
    throw InvalidParameter(msg.str());
  }
  p.shift = 0.5 * alpha * alpha * p.D * p.D;
  return p;
}

MorseParams with_gamma(const MorseParams& p, double gamma) {
  return derive_params(p.V0, p.alpha, gamma);
}

double xi(const MorseParams& p, double x) {
  return (2.0 * p.D + 1.0) * std::exp(-p.alpha * x);
}

double potential(const MorseParams& p, double x) {
  const double e = std::exp(-p.alpha * x);
  return p.V0 * (e * e - 2.0 * e);
}

double laguerre(Index n, double k, double x) {
  if (n < 0) return 0.0;
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + k - x;
  for (Index j = 1; j < n; ++j) {
    const double jj = static_cast<double>(j);
    const double next = ((2.0 * jj + 1.0 + k - x) * cur - (jj + k) * prev) / (jj + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double basis_eval(const MorseParams& p, Index n, double x) {
  if (n < 0) throw DomainError("basis_eval: negative index");
  const double z = xi(p, x);
  if (z == 0.0) return 0.0;
  const double nn = static_cast<double>(n);
  const double log_norm =
      0.5 * (log_gamma_real(nn + 1.0) + std::log(p.alpha) - log_gamma_real(nn + 2.0 * p.gamma + 1.0));
  const double envelope = std::exp(log_norm + (p.gamma + 0.5) * std::log(z) - 0.5 * z);
  if (envelope == 0.0) return 0.0;
  return envelope * laguerre(n, 2.0 * p.gamma, z);
}

}  // namespace morsesusy
