#pragma once

// Orthonormal polynomials attached to a Jacobi operator.
//
// Ground truth is the forward recursion
//   E P_n = b_{n-1} P_{n-1} + a_n P_n + b_n P_{n+1},   P_0 = 1,
// run on the coefficients exactly as the operator gives them. For the Morse operator the
// closed forms below reproduce it with
//   P_n(E) = (sigma)_n / sqrt(n! (2 gamma + 1)_n) 3F2(-n, -D + i lambda, -D - i lambda; sigma, sigma | 1)
// where sigma = gamma + 1/2 - D and lambda^2 = 2 E / alpha^2 - D^2. The partner family is the same
// expression with sigma -> sigma + 1 and -D -> 1 - D at the same lambda.

#include <Eigen/Core>

#include <optional>
#include <span>
#include <vector>

#include "morsesusy/morse.hpp"
#include "morsesusy/tridiagonal.hpp"

namespace morsesusy {

enum class EvalMode { Recursion, ClosedForm };

struct PolyFamily {
  TridiagonalOperator op;
  std::optional<MorseParams> params;  // required for ClosedForm
  bool partner = false;
  EvalMode mode = EvalMode::Recursion;
};

PolyFamily morse_family(const MorseParams& p, EvalMode mode = EvalMode::Recursion);
PolyFamily morse_partner_family(const MorseParams& p, EvalMode mode = EvalMode::Recursion);

/// P_0(E) .. P_{n_max}(E) by forward recursion.
/// Throws TruncationError if some b_n = 0 with n < n_max.
Eigen::VectorXd eval_recursion(const PolyFamily& fam, double energy, Index n_max);

/// Same contract as eval_recursion, run directly on a partner operator.
Eigen::VectorXd partner_eval_recursion(const TridiagonalOperator& partner_op, double energy, Index n_max);

/// Dispatches on fam.mode.
Eigen::VectorXd evaluate(const PolyFamily& fam, double energy, Index n_max);

/// Number of polynomials the family defines with index <= limit (stops at a natural truncation).
Index family_extent(const PolyFamily& fam, Index limit);

/// 2 E / alpha^2 - D^2; negative below the continuum edge.
double lambda_squared(const MorseParams& p, double energy);

double eval_closed_form(const MorseParams& p, double energy, Index n);

/// (sigma)_n / sqrt(n! (2 gamma + 1)_n). Exact zero past a natural truncation.
double p_at_zero(const MorseParams& p, Index n);

double partner_closed_form(const MorseParams& p, double energy, Index n);

/// K_0(E, 0) .. K_{n_max}(E, 0) with K_n(E, 0) = sum_{j<=n} P_j(E) P_j(0), both from the recursion.
Eigen::VectorXd kernel_values(const PolyFamily& fam, double energy, Index n_max);

double kernel_poly(const PolyFamily& fam, double energy, Index n);

/// (sigma + 1)_n / n! 3F2(-n, gamma + 1/2 - i lambda, gamma + 1/2 + i lambda; sigma + 1, 2 gamma + 1 | 1).
double kernel_closed_form(const MorseParams& p, double energy, Index n);

struct KernelRelationRow {
  Index n = 0;
  double rho = 0.0;           // least-squares fit of P+_n = rho K_n
  double rho_expected = 0.0;  // sqrt|b_0 P_1(0) / (b_n P_n(0) P_{n+1}(0))|
  double residual = 0.0;      // ||P+_n - rho K_n|| / ||P+_n|| over the grid
  double rho_error = 0.0;     // | |rho| - rho_expected | / rho_expected
  Index points_used = 0;
};

struct KernelRelationReport {
  std::vector<KernelRelationRow> rows;
  Index n_checked = 0;  // highest n where both sides are defined, capped by the request
  double max_residual = 0.0;
  double max_rho_error = 0.0;
};

/// Fits P+_n against K_n(., 0) for n = 0..n_max. Grid points where |K_n| is below 1e-8 of its
/// largest value on the grid are skipped; at least 12 points must remain.
KernelRelationReport kernel_relation_report(const PolyFamily& fam, const PolyFamily& partner_fam, Index n_max,
                                            std::span<const double> energy_grid);

/// Throws ProportionalityError for the first n whose residual exceeds 1e-9 or whose |rho|
/// misses the expected magnitude by more than 1e-10.
KernelRelationReport kernel_relation_check(const PolyFamily& fam, const PolyFamily& partner_fam, Index n_max,
                                           std::span<const double> energy_grid);

/// | E K_n(E,0) - b_n [P_{n+1}(E) P_n(0) - P_n(E) P_{n+1}(0)] | divided by the largest of the three
/// terms involved (floored at 1).
double christoffel_darboux_residual(const PolyFamily& fam, double energy, Index n);

}  // namespace morsesusy
