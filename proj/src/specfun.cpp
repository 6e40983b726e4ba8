#include "morsesusy/specfun.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace morsesusy {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeff = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// ln Gamma(z) for Re z >= 1/2.
Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex series = kLanczosCoeff[0];
  for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i) {
    series += kLanczosCoeff[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

// sin(pi x) with the argument reduced to [-1/2, 1/2] first.
double sin_pi(double x) {
  const double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  if (r > 0.5) return std::sin(std::numbers::pi * (1.0 - r));
  if (r < -0.5) return -std::sin(std::numbers::pi * (1.0 + r));
  return std::sin(std::numbers::pi * r);
}

double cos_2pi(double x) { return std::cos(2.0 * std::numbers::pi * (x - std::round(x))); }

// ln |sin(pi z)|, using |sin(pi(x+iy))|^2 = sin^2(pi x) + sinh^2(pi y).
double log_abs_sin_pi(Complex z) {
  const double x = z.real();
  const double y = std::abs(z.imag());
  if (y < 8.0) {
    const double s = sin_pi(x);
    const double sh = std::sinh(std::numbers::pi * y);
    return 0.5 * std::log(s * s + sh * sh);
  }
  const double q = std::exp(-2.0 * std::numbers::pi * y);
  return std::numbers::pi * y - std::numbers::ln2 +
         0.5 * std::log1p(q * q - 2.0 * cos_2pi(x) * q);
}

}  // namespace

double log_gamma_real(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma_real: argument must be a positive finite real");
  }
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

bool is_nonpositive_integer(double x, double tol) {
  return x <= tol && std::abs(x - std::round(x)) <= tol;
}

double log_gamma_abs(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma_abs: non-finite argument");
  }
  if (z.imag() == 0.0 && is_nonpositive_integer(z.real())) {
    throw PoleError("gamma pole at non-positive integer");
  }
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return std::log(std::numbers::pi) - log_abs_sin_pi(z) - log_gamma_abs(1.0 - z);
  }
  return lanczos_log_gamma(z).real();
}

double gamma_abs_complex(Complex z) { return std::exp(log_gamma_abs(z)); }

double hyp3f2_conjugate_pair(Index n, double centre, double mu_sq, double d, double e) {
  if (n < 0) {
    throw DomainError("hyp3f2_conjugate_pair: negative termination index");
  }
  const WideReal c = centre;
  const WideReal m2 = mu_sq;
  const WideReal dd = d;
  const WideReal ee = e;
  WideReal sum = 0;
  WideReal term = 1;
  for (Index k = 0; k <= n; ++k) {
    sum += term;
    if (k == n) break;
    const WideReal kk = static_cast<WideReal>(k);
    const WideReal df = dd + kk;
    const WideReal ef = ee + kk;
    if (detail::magnitude(df) < kPoleThreshold || detail::magnitude(ef) < kPoleThreshold) {
      throw PoleError("hyp3f2_conjugate_pair: denominator Pochhammer vanishes at k = " +
                      std::to_string(k));
    }
    const WideReal pair = (c + kk) * (c + kk) + m2;
    term = term * static_cast<WideReal>(k - n) * pair / (df * ef * static_cast<WideReal>(k + 1));
  }
  return static_cast<double>(sum);
}

void Hyp3F2Params::validate() const {
  if (n < 0) {
    throw DomainError("Hyp3F2Params: negative termination index");
  }
  for (const Complex& den : {d, e}) {
    if (den.imag() == 0.0 && is_nonpositive_integer(den.real()) && -den.real() < static_cast<double>(n)) {
      throw PoleError("Hyp3F2Params: denominator is a non-positive integer inside the sum");
    }
  }
}

Complex hyp3f2_terminating(const Hyp3F2Params& p) {
  p.validate();
  const std::array<Complex, 2> upper{p.b, p.c};
  const std::array<Complex, 2> lower{p.d, p.e};
  return hyp_terminating<Complex>(p.n, upper, lower);
}

bool is_effectively_real(Complex value, double tol) {
  return std::abs(value.imag()) <= tol * (1.0 + std::abs(value.real()));
}

ThomaeResult thomae_transform(const Hyp3F2Params& p) {
  const Complex s = p.d + p.e - p.b - p.c;
  // Gamma(e)/Gamma(e+n) * Gamma(s+n)/Gamma(s) = (s)_n / (e)_n, finite unless (e)_n = 0
  const Complex den = pochhammer(p.e, p.n);
  if (std::abs(den) < kPoleThreshold) {
    throw PoleError("thomae_transform: (e)_n vanishes");
  }
  // s is a denominator of the transformed series
  if (s.imag() == 0.0 && is_nonpositive_integer(s.real()) && -s.real() < static_cast<double>(p.n)) {
    throw PoleError("thomae_transform: d + e - b - c is a non-positive integer above -n");
  }
  ThomaeResult out;
  out.prefactor = pochhammer(s, p.n) / den;
  out.transformed = Hyp3F2Params{p.n, p.d - p.b, p.d - p.c, p.d, s};
  return out;
}

IdentitySides kernel_sum_identity(double sigma, Index n, const InnerSumTemplate& inner) {
  if (n < 0) {
    throw DomainError("kernel_sum_identity: negative order");
  }
  Complex lhs = 0.0;
  double coeff = 1.0;  // (sigma)_j / j!
  for (Index j = 0; j <= n; ++j) {
    lhs += coeff * hyp3f2_terminating(Hyp3F2Params{j, inner.a1, inner.a2, inner.b1, inner.b2});
    coeff *= (sigma + static_cast<double>(j)) / static_cast<double>(j + 1);
  }
  // (sigma+1)_n / (sigma+1)_k = (sigma+1+k)_{n-k} is merged into each term, so sigma + 1 at a
  // non-positive integer does not produce 0 * infinity.
  Complex rhs = 0.0;
  for (Index k = 0; k <= n; ++k) {
    Complex term = 1.0;
    for (Index i = 0; i < k; ++i) {
      const double ii = static_cast<double>(i);
      const Complex den = (inner.b1 + ii) * (inner.b2 + ii);
      if (std::abs(den) < kPoleThreshold) {
        throw PoleError("kernel_sum_identity: lower parameter vanishes at k = " + std::to_string(i));
      }
      term *= (ii - static_cast<double>(n)) * (sigma + ii) * (inner.a1 + ii) * (inner.a2 + ii) /
              (den * (ii + 1.0) * (ii + 1.0));
    }
    for (Index i = k; i < n; ++i) {
      const double ii = static_cast<double>(i);
      term *= (sigma + 1.0 + ii) / (ii + 1.0);
    }
    rhs += term;
  }
  return {lhs, rhs};
}

bool kernel_sum_identity_check(double sigma, Index n, const InnerSumTemplate& inner, double rel_tol) {
  const IdentitySides sides = kernel_sum_identity(sigma, n, inner);
  return std::abs(sides.lhs - sides.rhs) <= rel_tol * std::max(1.0, std::abs(sides.lhs));
}

}  // namespace morsesusy
