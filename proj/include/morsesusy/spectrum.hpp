#pragma once

// Bound states, the orthogonality measure of both polynomial families, and numerical
// Gram-matrix checks against it.
//
// Both measures are continuous dual Hahn measures in lambda, with b = c = gamma + 1/2 and
// a = -D (original) or a = 1 - D (partner). Mass points sit at lambda^2 = -(a + m)^2 for
// a + m < 0, which is the energy (alpha^2/2) m (2D - m) resp. the same at m + 1.

#include <Eigen/Core>

#include <vector>

#include "morsesusy/morse_params.hpp"
#include "morsesusy/orthopoly.hpp"
#include "morsesusy/quadrature.hpp"

namespace morsesusy {

/// floor(D + 1) for non-integer D. For integer D the zero-energy level m = D is not
/// counted, giving D.
Index bound_state_count(const MorseParams& p);

/// (alpha^2/2) m (2D - m), shifted so the ground state sits at 0.
double bound_energy(const MorseParams& p, Index m);

struct BoundStateSet {
  Index count = 0;
  Eigen::VectorXd energies;   // shifted, from the closed form
  Eigen::VectorXd unshifted;  // energies - alpha^2 D^2 / 2
  /// Columns are the eigenvectors of the N x N block at basis_gamma = D + 1/2 - N,
  /// where b_{N-1} = 0 and the block decouples.
  Eigen::MatrixXd eigenvectors;
  double basis_gamma = 0.0;
  double max_eigen_deviation = 0.0;  // block eigenvalues vs closed form, relative
};

/// Throws ConvergenceError if the block eigenvalues miss the closed form by more than 1e-10 relative.
BoundStateSet bound_energies(const MorseParams& p);

/// Eigenvalues of the leading N x N block of the shifted operator at p.
Eigen::VectorXd truncation_eigenvalues(const MorseParams& p, Index N);

/// sqrt(alpha / Gamma(2D)) xi^D e^{-xi/2}; requires gamma = D - 1/2 (InvalidParameter otherwise).
double ground_state_wavefunction(const MorseParams& p, double x);

/// |Gamma(a+il) Gamma(b+il) Gamma(c+il) / Gamma(2il)|^2 / (2 pi Gamma(a+b) Gamma(a+c) Gamma(b+c)).
/// Zero when one of the normalizing gammas sits at a pole.
double dual_hahn_density(double a, double b, double c, double lambda);

/// Mass-point weights for a + m < 0:
///   Gamma(b-a) Gamma(c-a) / (Gamma(-2a) Gamma(b+c))
///   * (2a)_m (a+1)_m (a+b)_m (a+c)_m (-1)^m / ((a)_m (a-b+1)_m (a-c+1)_m m!)
std::vector<double> dual_hahn_discrete_weights(double a, double b, double c);

/// Omega(E) on E > alpha^2 D^2 / 2, in energy measure. DomainError at or below the edge.
double continuous_density(const MorseParams& p, double energy);

/// The same density per unit lambda: Omega(E) dE = Omega_lambda d lambda.
double continuous_density_lambda(const MorseParams& p, double lambda);

/// Weights at the bound energies, m < D:
///   Gamma^2(gamma + 1/2 + D) / (Gamma(2D) Gamma(2 gamma + 1))
///   * (-2D)_m (1-D)_m (sigma)_m^2 (-1)^m / ((-D)_m (1/2 - D - gamma)_m^2 m!)
std::vector<double> discrete_weights(const MorseParams& p);

/// Partner weights at E_{m+1}, m < D - 1:
///   Gamma^2(gamma + D - 1/2) / (Gamma(2D - 2) Gamma(2 gamma + 1))
///   * (2-2D)_m (2-D)_m (sigma+1)_m^2 / ((-1)^m m! (1-D)_m (3/2 - D - gamma)_m^2)
std::vector<double> partner_discrete_weights(const MorseParams& p);

struct MassPoint {
  Index m = 0;
  double energy = 0.0;
  double weight = 0.0;
};

struct SpectralMeasure {
  std::vector<MassPoint> discrete;
  double continuous_edge = 0.0;  // alpha^2 D^2 / 2 for both families
  double alpha = 1.0;
  double D = 0.0;
  double a = 0.0;  // dual Hahn parameters
  double b = 0.5;
  bool has_continuum = true;

  double energy_at(double lambda) const { return 0.5 * alpha * alpha * (lambda * lambda + D * D); }
  double density_lambda(double lambda) const;
  double density(double energy) const;
  /// Quadrature settings that respect the gamma poles nearest the real lambda axis.
  SemiInfiniteOptions quadrature_options() const;
};

SpectralMeasure spectral_measure(const MorseParams& p);
SpectralMeasure partner_measure(const MorseParams& p);

/// Discrete mass plus the integral of the density.
double total_mass(const SpectralMeasure& mu);

/// Integral of Omega(E) dE over [e0, e1], both above the edge, done in E directly.
double density_integral_energy(const SpectralMeasure& mu, double e0, double e1);
/// The same integral done in lambda over the image interval.
double density_integral_lambda(const SpectralMeasure& mu, double e0, double e1);

struct OrthogonalityReport {
  Eigen::MatrixXd gram;
  Index order = 0;  // highest degree included
  double max_deviation = 0.0;
};

/// Gram matrix of P_0..P_order against the measure, order = min(n_max, last polynomial the
/// family defines). Throws QuadratureError if the continuous tail never decays.
OrthogonalityReport verify_orthogonality(const SpectralMeasure& mu, const PolyFamily& fam, Index n_max);

}  // namespace morsesusy
