#pragma once

// Morse oscillator parameters and the Laguerre basis in coordinate space.
// Units: hbar = m = 1, so H = -1/2 d^2/dx^2 + V0 (e^{-2 alpha x} - 2 e^{-alpha x}).

#include "morsesusy/specfun.hpp"

namespace morsesusy {

struct MorseParams {
  double V0 = 8.0;
  double alpha = 1.0;
  double gamma = 0.0;
  double D = 3.5;       // sqrt(2 V0) / alpha - 1/2
  double shift = 6.125; // alpha^2 D^2 / 2

  /// gamma + 1/2 - D, the parameter that controls natural truncation.
  double sigma() const { return gamma + 0.5 - D; }
  /// alpha^2 / 2, the energy unit of every coefficient.
  double energy_unit() const { return 0.5 * alpha * alpha; }
};

/// Validates V0 > 0, alpha > 0, 2 gamma > -1 and D > 0. Throws InvalidParameter.
MorseParams derive_params(double V0, double alpha, double gamma);

/// Same oscillator, different basis scale.
MorseParams with_gamma(const MorseParams& p, double gamma);

/// xi(x) = (2D + 1) e^{-alpha x}, i.e. sqrt(8 V0)/alpha e^{-alpha x}.
double xi(const MorseParams& p, double x);

/// V0 (e^{-2 alpha x} - 2 e^{-alpha x}).
double potential(const MorseParams& p, double x);

/// Generalized Laguerre L_n^{(k)}(x) by the three-term recurrence; 0 for n < 0.
double laguerre(Index n, double k, double x);

/// Normalized basis function phi_n(x). The prefactor sqrt(n! alpha / Gamma(n + 2 gamma + 1))
/// is formed in log space.
double basis_eval(const MorseParams& p, Index n, double x);

struct BasisFunction {
  MorseParams params;
  Index n = 0;

  double operator()(double x) const { return basis_eval(params, n, x); }
  double xi_at(double x) const { return morsesusy::xi(params, x); }
};

}  // namespace morsesusy
