#include "morsesusy/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "morsesusy/susy.hpp"

namespace morsesusy {

namespace {

Eigen::VectorXd run_recursion(const TridiagonalOperator& op, double energy, Index n_max) {
  if (n_max < 0) throw DomainError("recursion: negative order");
  Eigen::VectorXd P(n_max + 1);
  P(0) = 1.0;
  double b_prev = 0.0;
  for (Index n = 0; n < n_max; ++n) {
    const double b = op.b(n);
    if (b == 0.0) {
      throw TruncationError("recursion: b_" + std::to_string(n) + " = 0 before order " +
                                std::to_string(n_max),
                            static_cast<long>(n));
    }
    const double below = n > 0 ? b_prev * P(n - 1) : 0.0;
    P(n + 1) = ((energy - op.a(n)) * P(n) - below) / b;
    b_prev = b;
  }
  return P;
}

// (s)_n / sqrt(n! (2 gamma + 1)_n), built factor by factor.
double zero_prefactor(double s, double gamma, Index n) {
  double r = 1.0;
  for (Index j = 0; j < n; ++j) {
    const double jj = static_cast<double>(j);
    r *= (s + jj) / std::sqrt((jj + 1.0) * (2.0 * gamma + 1.0 + jj));
  }
  return r;
}

const MorseParams& require_params(const PolyFamily& fam) {
  if (!fam.params) throw DomainError("closed-form evaluation needs Morse parameters");
  return *fam.params;
}

}  // namespace

PolyFamily morse_family(const MorseParams& p, EvalMode mode) {
  return {shifted_operator(p), p, false, mode};
}

PolyFamily morse_partner_family(const MorseParams& p, EvalMode mode) {
  return {closed_form_partner_operator(p), p, true, mode};
}

Eigen::VectorXd eval_recursion(const PolyFamily& fam, double energy, Index n_max) {
  return run_recursion(fam.op, energy, n_max);
}

Eigen::VectorXd partner_eval_recursion(const TridiagonalOperator& partner_op, double energy, Index n_max) {
  return run_recursion(partner_op, energy, n_max);
}

Eigen::VectorXd evaluate(const PolyFamily& fam, double energy, Index n_max) {
  if (fam.mode == EvalMode::Recursion) return eval_recursion(fam, energy, n_max);
  const MorseParams& p = require_params(fam);
  Eigen::VectorXd P(n_max + 1);
  for (Index n = 0; n <= n_max; ++n) {
    P(n) = fam.partner ? partner_closed_form(p, energy, n) : eval_closed_form(p, energy, n);
  }
  return P;
}

Index family_extent(const PolyFamily& fam, Index limit) {
  const auto cut = natural_truncation(fam.op, limit + 1);
  return cut ? std::min(*cut, limit + 1) : limit + 1;
}

double lambda_squared(const MorseParams& p, double energy) {
  return 2.0 * energy / (p.alpha * p.alpha) - p.D * p.D;
}

double eval_closed_form(const MorseParams& p, double energy, Index n) {
  if (n < 0) throw DomainError("eval_closed_form: negative order");
  const double s = depth_factor(p, 0.0);
  const double sum = hyp3f2_conjugate_pair(n, -p.D, lambda_squared(p, energy), s, s);
  return zero_prefactor(s, p.gamma, n) * sum;
}

double p_at_zero(const MorseParams& p, Index n) {
  if (n < 0) throw DomainError("p_at_zero: negative order");
  return zero_prefactor(depth_factor(p, 0.0), p.gamma, n);
}

double partner_closed_form(const MorseParams& p, double energy, Index n) {
  if (n < 0) throw DomainError("partner_closed_form: negative order");
  const double s = depth_factor(p, 1.0);
  const double sum = hyp3f2_conjugate_pair(n, 1.0 - p.D, lambda_squared(p, energy), s, s);
  return zero_prefactor(s, p.gamma, n) * sum;
}

Eigen::VectorXd kernel_values(const PolyFamily& fam, double energy, Index n_max) {
  const Eigen::VectorXd P = eval_recursion(fam, energy, n_max);
  const Eigen::VectorXd P0 = eval_recursion(fam, 0.0, n_max);
  Eigen::VectorXd K(n_max + 1);
  double acc = 0.0;
  for (Index j = 0; j <= n_max; ++j) {
    acc += P(j) * P0(j);
    K(j) = acc;
  }
  return K;
}

double kernel_poly(const PolyFamily& fam, double energy, Index n) {
  return kernel_values(fam, energy, n)(n);
}

double kernel_closed_form(const MorseParams& p, double energy, Index n) {
  if (n < 0) throw DomainError("kernel_closed_form: negative order");
  const double s1 = depth_factor(p, 1.0);
  double pre = 1.0;
  for (Index j = 0; j < n; ++j) {
    pre *= (s1 + static_cast<double>(j)) / static_cast<double>(j + 1);
  }
  const double b = p.gamma + 0.5;
  return pre * hyp3f2_conjugate_pair(n, b, lambda_squared(p, energy), s1, 2.0 * p.gamma + 1.0);
}

KernelRelationReport kernel_relation_report(const PolyFamily& fam, const PolyFamily& partner_fam, Index n_max,
                                            std::span<const double> energy_grid) {
  if (energy_grid.size() < 12) {
    throw DomainError("kernel_relation_report: the energy grid needs at least 12 points");
  }
  // P_{n+1}(0) and b_n enter the expected constant, so stop one short of the family extent.
  const Index limit = std::min({n_max, family_extent(fam, n_max + 1) - 2, family_extent(partner_fam, n_max) - 1});
  KernelRelationReport report;
  report.n_checked = limit;
  if (limit < 0) return report;

  const Eigen::VectorXd P0 = eval_recursion(fam, 0.0, limit + 1);
  const Index G = static_cast<Index>(energy_grid.size());
  Eigen::MatrixXd K(G, limit + 1);
  Eigen::MatrixXd Pp(G, limit + 1);
  for (Index g = 0; g < G; ++g) {
    const double e = energy_grid[static_cast<std::size_t>(g)];
    K.row(g) = kernel_values(fam, e, limit).transpose();
    Pp.row(g) = eval_recursion(partner_fam, e, limit).transpose();
  }

  const double b0p1 = fam.op.b(0) * P0(1);
  for (Index n = 0; n <= limit; ++n) {
    const double kmax = K.col(n).cwiseAbs().maxCoeff();
    double kk = 0.0;
    double kp = 0.0;
    double pp = 0.0;
    Index used = 0;
    for (Index g = 0; g < G; ++g) {
      if (std::abs(K(g, n)) < 1e-8 * kmax) continue;
      kk += K(g, n) * K(g, n);
      kp += K(g, n) * Pp(g, n);
      pp += Pp(g, n) * Pp(g, n);
      ++used;
    }
    if (used < 12) {
      throw ProportionalityError("kernel relation: fewer than 12 usable grid points", static_cast<long>(n));
    }
    KernelRelationRow row;
    row.n = n;
    row.points_used = used;
    row.rho = kp / kk;
    double rr = 0.0;
    for (Index g = 0; g < G; ++g) {
      if (std::abs(K(g, n)) < 1e-8 * kmax) continue;
      const double r = Pp(g, n) - row.rho * K(g, n);
      rr += r * r;
    }
    row.residual = std::sqrt(rr / pp);
    // the n = 0 relation is P+_0 = K_0 = 1
    row.rho_expected = n == 0 ? 1.0 : std::sqrt(std::abs(b0p1 / (fam.op.b(n) * P0(n) * P0(n + 1))));
    row.rho_error = std::abs(std::abs(row.rho) - row.rho_expected) / row.rho_expected;
    report.max_residual = std::max(report.max_residual, row.residual);
    report.max_rho_error = std::max(report.max_rho_error, row.rho_error);
    report.rows.push_back(row);
  }
  return report;
}

KernelRelationReport kernel_relation_check(const PolyFamily& fam, const PolyFamily& partner_fam, Index n_max,
                                           std::span<const double> energy_grid) {
  KernelRelationReport report = kernel_relation_report(fam, partner_fam, n_max, energy_grid);
  for (const auto& row : report.rows) {
    if (row.residual > 1e-9 || row.rho_error > 1e-10) {
      throw ProportionalityError("P+_n is not proportional to K_n(., 0) with the expected constant at n = " +
                                     std::to_string(row.n),
                                 static_cast<long>(row.n));
    }
  }
  return report;
}

double christoffel_darboux_residual(const PolyFamily& fam, double energy, Index n) {
  const Eigen::VectorXd P = eval_recursion(fam, energy, n + 1);
  const Eigen::VectorXd P0 = eval_recursion(fam, 0.0, n + 1);
  double K = 0.0;
  for (Index j = 0; j <= n; ++j) K += P(j) * P0(j);
  const double b = fam.op.b(n);
  const double t1 = b * P(n + 1) * P0(n);
  const double t2 = b * P(n) * P0(n + 1);
  const double lhs = energy * K;
  const double scale = std::max({1.0, std::abs(lhs), std::abs(t1), std::abs(t2)});
  return std::abs(lhs - (t1 - t2)) / scale;
}

}  // namespace morsesusy
