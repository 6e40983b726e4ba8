#pragma once

// Brute-force reference computations that share no code with the closed forms:
// a finite-difference Schroedinger solver and direct quadrature of basis matrix elements.

#include <Eigen/Core>

#include <vector>

#include "morsesusy/morse_params.hpp"

namespace morsesusy {

struct Grid1D {
  double x_min = -3.0;
  double x_max = 40.0;
  Index n_points = 8000;

  double spacing() const { return (x_max - x_min) / static_cast<double>(n_points + 1); }
};

/// x in [-3/alpha, 40/alpha] with 8000 interior points.
Grid1D default_grid(const MorseParams& p);

struct FdBoundState {
  double energy = 0.0;          // Richardson-extrapolated, unshifted
  double error_estimate = 0.0;  // spread between the two extrapolants
  Eigen::VectorXd x;            // interior nodes of the coarsest grid
  Eigen::VectorXd psi;          // normalized so that h sum psi^2 = 1, positive maximum
};

/// Number of eigenvalues below -1e-9 of the central-difference Hamiltonian on `grid`.
Index fd_bound_state_count(const MorseParams& p, const Grid1D& grid);

/// Lowest k eigenpairs of -1/2 d^2/dx^2 + V with Dirichlet ends, via Sturm bisection and
/// inverse iteration. Energies are solved on h, h/2 and h/4 and Richardson-extrapolated; the
/// two extrapolants must agree to 1e-7 relative or ConvergenceError is thrown.
std::vector<FdBoundState> fd_bound_states(const MorseParams& p, const Grid1D& grid, Index k);

/// <phi_n | H~ | phi_m> by Gauss-Legendre quadrature in ln xi, with the kinetic term applied
/// to phi_m analytically in xi.
double numeric_matrix_element(const MorseParams& p, Index n, Index m);

/// <phi_n | phi_m> by the same quadrature.
double numeric_overlap(const MorseParams& p, Index n, Index m);

}  // namespace morsesusy
