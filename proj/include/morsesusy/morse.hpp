#pragma once

// Tridiagonal matrix elements of the Morse Hamiltonian in the Laguerre basis.

#include "morsesusy/morse_params.hpp"
#include "morsesusy/tridiagonal.hpp"

namespace morsesusy {

/// n + gamma + 1/2 - D. Rounding residue below 1e-12 (relative to n) is returned as an
/// exact zero, so a natural truncation decouples the operator exactly.
double depth_factor(const MorseParams& p, double n);

struct CoefficientPair {
  double a;
  double b;
};

/// Unshifted elements:
///   a~_n = (alpha^2/2) [(n + sigma)^2 + n (n + 2 gamma) - D^2]
///   b~_n = -(alpha^2/2) sqrt((n+1)(n + 2 gamma + 1)) (n + sigma)
CoefficientPair h_tilde_coefficients(const MorseParams& p, Index n);

/// Representation of H~ itself.
TridiagonalOperator unshifted_operator(const MorseParams& p);

/// H = H~ + alpha^2 D^2 / 2, positive semi-definite: a_n = (alpha^2/2)[(n + sigma)^2 + n (n + 2 gamma)].
TridiagonalOperator shifted_operator(const MorseParams& p);

}  // namespace morsesusy
