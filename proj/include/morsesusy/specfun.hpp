#pragma once

// Scalar special functions: gamma machinery, Pochhammer symbols and
// terminating generalized hypergeometric sums at unit argument.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>

#include "morsesusy/errors.hpp"

namespace morsesusy {

using Index = std::ptrdiff_t;
using Complex = std::complex<double>;

/// Accumulator for sums that cancel heavily (alternating 3F2 series).
#if defined(__SIZEOF_FLOAT128__) && !defined(__clang__)
using WideReal = __float128;
#else
using WideReal = long double;
#endif

/// Denominator Pochhammer factors smaller than this in modulus count as zero.
inline constexpr double kPoleThreshold = 1e-300;

namespace detail {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename Scalar>
double magnitude(const Scalar& x) {
  if constexpr (is_complex<Scalar>::value) {
    return static_cast<double>(std::abs(x));
  } else {
    return static_cast<double>(x < Scalar(0) ? -x : x);
  }
}

}  // namespace detail

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma_real(double x);

/// ln |Gamma(z)| via Lanczos (g = 7, 9 terms) with reflection for Re z < 1/2.
/// Throws PoleError at non-positive integers.
double log_gamma_abs(Complex z);

/// |Gamma(z)|.
double gamma_abs_complex(Complex z);

/// True when x is an integer <= 0 to within `tol`.
bool is_nonpositive_integer(double x, double tol = 0.0);

/// Rising factorial (x)_k = x (x+1) ... (x+k-1), (x)_0 = 1.
template <typename Scalar>
Scalar pochhammer(Scalar x, Index k) {
  Scalar result(1);
  for (Index i = 0; i < k; ++i) {
    result *= x + Scalar(static_cast<double>(i));
  }
  return result;
}

/// Terminating sum  sum_{k=0}^{n} (-n)_k prod_j (upper_j)_k / [prod_j (lower_j)_k k!].
///
/// `upper` holds the numerator parameters *other than* the leading -n. Terms are
/// generated by forward ratio recursion, so no Pochhammer quotient is ever formed
/// explicitly. Throws PoleError when a denominator factor vanishes before the
/// series terminates.
template <typename Scalar>
Scalar hyp_terminating(Index n, std::span<const Scalar> upper, std::span<const Scalar> lower) {
  if (n < 0) {
    throw DomainError("hyp_terminating: negative termination index");
  }
  Scalar sum(0);
  Scalar term(1);
  for (Index k = 0; k <= n; ++k) {
    sum += term;
    if (k == n) {
      break;
    }
    const Scalar kk(static_cast<double>(k));
    Scalar num(static_cast<double>(k - n));
    for (const auto& a : upper) {
      num *= a + kk;
    }
    Scalar den(static_cast<double>(k + 1));
    for (const auto& b : lower) {
      const Scalar factor = b + kk;
      if (detail::magnitude(factor) < kPoleThreshold) {
        throw PoleError("hyp_terminating: denominator Pochhammer vanishes at k = " +
                        std::to_string(k));
      }
      den *= factor;
    }
    term = term * num / den;
  }
  return sum;
}

/// 3F2(-n, c + i mu, c - i mu; d, e | 1) in real arithmetic.
///
/// The conjugate numerator pair enters only through (c + k)^2 + mu^2, so mu^2 may
/// be negative (mu purely imaginary). Accumulated in WideReal.
double hyp3f2_conjugate_pair(Index n, double centre, double mu_sq, double d, double e);

/// Parameters of 3F2(-n, b, c; d, e | 1).
struct Hyp3F2Params {
  Index n = 0;
  Complex b;
  Complex c;
  Complex d;
  Complex e;

  /// Throws PoleError when d or e is a non-positive integer of magnitude < n.
  void validate() const;
};

/// Evaluates the terminating 3F2 in complex arithmetic.
Complex hyp3f2_terminating(const Hyp3F2Params& p);

/// Imaginary part tolerance used when a 3F2 is known to be real.
bool is_effectively_real(Complex value, double tol = 1e-12);

struct ThomaeResult {
  Hyp3F2Params transformed;
  Complex prefactor;
};

/// Thomae relation for a terminating 3F2:
///   3F2(a,b,c;d,e) = Gamma(e) Gamma(d+e-a-b-c) / [Gamma(e-a) Gamma(d+e-b-c)]
///                    * 3F2(a, d-b, d-c; d, d+e-b-c)
/// with a = -n. The gamma ratio collapses to (d+e-b-c)_n / (e)_n, which is what is
/// evaluated. PoleError when (e)_n = 0 or when d+e-b-c is one of 0, -1, ..., 1-n, where it is
/// a vanishing denominator of the transformed series.
ThomaeResult thomae_transform(const Hyp3F2Params& p);

/// Inner 3F2(-j, a1, a2; b1, b2 | 1) template for the kernel summation identity.
struct InnerSumTemplate {
  Complex a1;
  Complex a2;
  Complex b1;
  Complex b2;
};

struct IdentitySides {
  Complex lhs;
  Complex rhs;
};

/// Both sides of
///   sum_{j=0}^{n} (s)_j / j! 3F2(-j, a1, a2; b1, b2) = (s+1)_n / n! 4F3(-n, s, a1, a2; s+1, b1, b2).
IdentitySides kernel_sum_identity(double sigma, Index n, const InnerSumTemplate& inner);

/// True iff the two sides agree within `rel_tol` relative to max(1, |lhs|).
bool kernel_sum_identity_check(double sigma, Index n, const InnerSumTemplate& inner,
                               double rel_tol = 1e-11);

}  // namespace morsesusy
