#pragma once

// Factorization H = A^dagger A of a positive semi-definite Jacobi operator and the
// partner H+ = A A^dagger.
//
// A is lower bidiagonal on the basis, A|phi_n> = c_n |phi_n> + d_n |phi_{n-1}>, so on
// coefficient vectors
//   (A v)_n        = c_n v_n + d_{n+1} v_{n+1}
//   (A^dagger v)_n = c_n v_n + d_n v_{n-1}
// and A^dagger A has a_n = c_n^2 + d_n^2, b_n = c_n d_{n+1}.

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morsesusy/morse.hpp"

namespace morsesusy {

struct FactorCoefficients {
  Sequence c;
  Sequence d;  // d(0) == 0
  /// Number of valid entries of c and d. Empty for the unbounded closed forms.
  std::optional<Index> c_extent;
  std::optional<Index> d_extent;
  std::vector<std::string> warnings;
};

struct CdPair {
  double c;
  double d_next;
};

/// c_n = (alpha/sqrt 2)(n + sigma),  d_{n+1} = -(alpha/sqrt 2) sqrt((n+1)(n+1+2 gamma)).
CdPair closed_form_cd(const MorseParams& p, Index n);

FactorCoefficients closed_form_factor(const MorseParams& p);

/// Fallback used where the zero-energy solution vanishes (for instance c_0 = 0 when 0 is
/// an eigenvalue).
using CdFallback = std::function<CdPair(Index)>;

/// Factor from the values P_n(0) of the zero-energy solution:
///   d_{n+1}^2 = -b_n P_n(0) / P_{n+1}(0),   c_n^2 = -b_n P_{n+1}(0) / P_n(0),
/// with d_{n+1} <= 0 and c_n d_{n+1} = b_n. `p0` needs n_max + 2 entries. Produces c_0..c_{n_max}
/// and d_1..d_{n_max+1}; stops early at a natural truncation b_n = 0 (c_n then follows from
/// a_n = c_n^2 + d_n^2). Every n is validated against a_n and b_n to 1e-12 relative.
///
/// Throws FactorizationError on a negative square below -1e-12 or a failed validation,
/// DomainError when P_n(0) = 0 and no fallback is given.
FactorCoefficients factor_from_polynomials(const TridiagonalOperator& op, std::span<const double> p0,
                                           Index n_max, const CdFallback& fallback = {});

/// Components 0..L-1 of A v for a length-L vector.
Eigen::VectorXd apply_A(const FactorCoefficients& fc, const Eigen::VectorXd& v);

/// Components 0..L of A^dagger v for a length-L vector.
Eigen::VectorXd apply_A_dagger(const FactorCoefficients& fc, const Eigen::VectorXd& v);

/// a+_n = c_n^2 + d_{n+1}^2,  b+_n = c_{n+1} d_{n+1}.
TridiagonalOperator partner_operator(const FactorCoefficients& fc);

/// Closed forms of the partner elements:
///   a+_n = (alpha^2/2)[(n+1)(n+2 gamma+1) + (n + sigma)^2]
///   b+_n = -(alpha^2/2) sqrt((n+1)(n+2 gamma+1)) (n + sigma + 1)
CoefficientPair partner_coefficients(const MorseParams& p, Index n);

TridiagonalOperator closed_form_partner_operator(const MorseParams& p);

}  // namespace morsesusy
