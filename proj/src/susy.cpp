#include "morsesusy/susy.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace morsesusy {

namespace {

Sequence materialized(std::vector<double> values, const char* name) {
  auto data = std::make_shared<const std::vector<double>>(std::move(values));
  return [data, name](Index n) {
    if (n < 0 || n >= static_cast<Index>(data->size())) {
      throw std::out_of_range(std::string(name) + ": index " + std::to_string(n) +
                              " outside the factorized range");
    }
    return (*data)[static_cast<std::size_t>(n)];
  };
}

// Squares in [-1e-12 scale, 0) are rounding noise and clamp to zero.
double checked_square(double value, double scale, Index n, const char* what,
                      std::vector<std::string>& warnings) {
  if (value >= 0.0) return value;
  if (value >= -1e-12 * scale) {
    std::ostringstream msg;
    msg << what << " at n = " << n << " clamped from " << value << " to 0";
    warnings.push_back(msg.str());
    return 0.0;
  }
  std::ostringstream msg;
  msg << "negative " << what << " " << value << " at n = " << n
      << ": operator is not positive semi-definite";
  throw FactorizationError(msg.str());
}

void validate(Index n, double a, double b, double c, double d, double d_next) {
  const double scale = std::max({std::abs(a), std::abs(b), c * c, d * d, d_next * d_next});
  const double da = std::abs(a - (c * c + d * d));
  const double db = std::abs(b - c * d_next);
  if (da > 1e-12 * scale || db > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "factorization check failed at n = " << n << ": |a - c^2 - d^2| = " << da
        << ", |b - c d| = " << db;
    throw FactorizationError(msg.str());
  }
}

}  // namespace

CdPair closed_form_cd(const MorseParams& p, Index n) {
  if (n < 0) throw DomainError("closed_form_cd: negative index");
  const double nn = static_cast<double>(n);
  const double s = p.alpha / std::numbers::sqrt2;
  return {s * depth_factor(p, nn), -s * std::sqrt((nn + 1.0) * (nn + 1.0 + 2.0 * p.gamma))};
}

FactorCoefficients closed_form_factor(const MorseParams& p) {
  FactorCoefficients fc;
  fc.c = [p](Index n) { return closed_form_cd(p, n).c; };
  fc.d = [p](Index n) { return n == 0 ? 0.0 : closed_form_cd(p, n - 1).d_next; };
  return fc;
}

FactorCoefficients factor_from_polynomials(const TridiagonalOperator& op, std::span<const double> p0,
                                           Index n_max, const CdFallback& fallback) {
  if (n_max < 0) throw DomainError("factor_from_polynomials: negative n_max");
  if (static_cast<Index>(p0.size()) < n_max + 2) {
    throw DomainError("factor_from_polynomials: need P_n(0) for n <= n_max + 1");
  }
  FactorCoefficients fc;
  std::vector<double> c;
  std::vector<double> d{0.0};
  for (Index n = 0; n <= n_max; ++n) {
    const double a = op.a(n);
    const double b = op.b(n);
    const double dn = d.back();
    const auto i = static_cast<std::size_t>(n);
    const bool degenerate = b == 0.0 || p0[i] == 0.0 || p0[i + 1] == 0.0;
    if (degenerate && fallback) {
      const CdPair cd = fallback(n);
      fc.warnings.push_back("closed-form fallback used at n = " + std::to_string(n));
      validate(n, a, b, cd.c, dn, cd.d_next);
      c.push_back(cd.c);
      d.push_back(cd.d_next);
      continue;
    }
    if (b == 0.0) {
      // Natural truncation: the block closes here and only c_n remains determined.
      const double scale = std::max(std::abs(a), 1.0);
      double c2 = checked_square(a - dn * dn, scale, n, "c_n^2", fc.warnings);
      // a_n - d_n^2 is a difference of nearly equal numbers here; rounding residue means zero
      if (c2 <= 1e-14 * scale) c2 = 0.0;
      const double cn = std::sqrt(c2);
      validate(n, a, b, cn, dn, 0.0);
      c.push_back(cn);
      break;
    }
    if (p0[i] == 0.0 || p0[i + 1] == 0.0) {
      throw DomainError("factor_from_polynomials: P_n(0) vanishes at n = " +
                        std::to_string(p0[i] == 0.0 ? n : n + 1));
    }
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    const double d2 = checked_square(-b * p0[i] / p0[i + 1], scale, n + 1, "d_n^2", fc.warnings);
    const double c2 = checked_square(-b * p0[i + 1] / p0[i], scale, n, "c_n^2", fc.warnings);
    const double d_next = -std::sqrt(d2);
    const double cn = (b < 0.0 ? 1.0 : -1.0) * std::sqrt(c2);
    validate(n, a, b, cn, dn, d_next);
    c.push_back(cn);
    d.push_back(d_next);
  }
  fc.c_extent = static_cast<Index>(c.size());
  fc.d_extent = static_cast<Index>(d.size());
  fc.c = materialized(std::move(c), "c");
  fc.d = materialized(std::move(d), "d");
  return fc;
}

Eigen::VectorXd apply_A(const FactorCoefficients& fc, const Eigen::VectorXd& v) {
  const Index L = v.size();
  Eigen::VectorXd out(L);
  for (Index n = 0; n < L; ++n) {
    out(n) = fc.c(n) * v(n);
    if (n + 1 < L) out(n) += fc.d(n + 1) * v(n + 1);
  }
  return out;
}

Eigen::VectorXd apply_A_dagger(const FactorCoefficients& fc, const Eigen::VectorXd& v) {
  const Index L = v.size();
  Eigen::VectorXd out(L + 1);
  for (Index n = 0; n <= L; ++n) {
    out(n) = (n < L ? fc.c(n) * v(n) : 0.0);
    if (n >= 1) out(n) += fc.d(n) * v(n - 1);
  }
  return out;
}

TridiagonalOperator partner_operator(const FactorCoefficients& fc) {
  return {[fc](Index n) {
            const double c = fc.c(n);
            const double d = fc.d(n + 1);
            return c * c + d * d;
          },
          [fc](Index n) { return fc.c(n + 1) * fc.d(n + 1); }};
}

CoefficientPair partner_coefficients(const MorseParams& p, Index n) {
  if (n < 0) throw DomainError("partner_coefficients: negative index");
  const double nn = static_cast<double>(n);
  const double u = p.energy_unit();
  const double f = depth_factor(p, nn);
  const double g = (nn + 1.0) * (nn + 2.0 * p.gamma + 1.0);
  return {u * (g + f * f), -u * std::sqrt(g) * depth_factor(p, nn + 1.0)};
}

TridiagonalOperator closed_form_partner_operator(const MorseParams& p) {
  return {[p](Index n) { return partner_coefficients(p, n).a; },
          [p](Index n) { return partner_coefficients(p, n).b; }};
}

}  // namespace morsesusy
