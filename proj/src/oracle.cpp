#include "morsesusy/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "morsesusy/quadrature.hpp"

namespace morsesusy {

namespace {

constexpr double kBoundCut = -1e-9;

struct FdMatrix {
  Eigen::VectorXd x;
  Eigen::VectorXd diag;
  double off = 0.0;  // constant off-diagonal -1/(2 h^2)
  double h = 0.0;
};

FdMatrix build(const MorseParams& p, double x_min, double x_max, Index n) {
  FdMatrix m;
  m.h = (x_max - x_min) / static_cast<double>(n + 1);
  m.off = -0.5 / (m.h * m.h);
  m.x.resize(n);
  m.diag.resize(n);
  for (Index i = 0; i < n; ++i) {
    m.x(i) = x_min + static_cast<double>(i + 1) * m.h;
    m.diag(i) = 1.0 / (m.h * m.h) + potential(p, m.x(i));
  }
  return m;
}

// Number of eigenvalues strictly below `shift` (Sturm sequence of LDL^T pivots).
Index sturm_count(const FdMatrix& m, double shift) {
  const double e2 = m.off * m.off;
  Index count = 0;
  double q = 1.0;
  for (Index i = 0; i < m.diag.size(); ++i) {
    q = m.diag(i) - shift - (i > 0 ? e2 / q : 0.0);
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

double kth_eigenvalue(const FdMatrix& m, Index k, double lo, double hi) {
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(m, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> lowest_eigenvalues(const FdMatrix& m, Index k, double floor) {
  std::vector<double> out;
  for (Index j = 0; j < k; ++j) out.push_back(kth_eigenvalue(m, j, floor, kBoundCut));
  return out;
}

// Solves (T - shift) y = rhs for the constant-off-diagonal tridiagonal T (Thomas algorithm).
Eigen::VectorXd solve_shifted(const FdMatrix& m, double shift, const Eigen::VectorXd& rhs) {
  const Index n = m.diag.size();
  Eigen::VectorXd c(n);
  Eigen::VectorXd y(n);
  double piv = m.diag(0) - shift;
  c(0) = m.off / piv;
  y(0) = rhs(0) / piv;
  for (Index i = 1; i < n; ++i) {
    piv = m.diag(i) - shift - m.off * c(i - 1);
    if (piv == 0.0) piv = 1e-300;
    c(i) = m.off / piv;
    y(i) = (rhs(i) - m.off * y(i - 1)) / piv;
  }
  for (Index i = n - 2; i >= 0; --i) y(i) -= c(i) * y(i + 1);
  return y;
}

Eigen::VectorXd inverse_iteration(const FdMatrix& m, double eigenvalue) {
  const double shift = eigenvalue + 1e-10 * std::max(1.0, std::abs(eigenvalue));
  Eigen::VectorXd v = Eigen::VectorXd::Ones(m.diag.size());
  for (int iter = 0; iter < 4; ++iter) {
    v = solve_shifted(m, shift, v);
    v /= v.norm();
  }
  v /= std::sqrt(m.h) * v.norm();
  Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  if (v(imax) < 0.0) v = -v;
  return v;
}

}  // namespace

Grid1D default_grid(const MorseParams& p) {
  return {-3.0 / p.alpha, 40.0 / p.alpha, 8000};
}

Index fd_bound_state_count(const MorseParams& p, const Grid1D& grid) {
  return sturm_count(build(p, grid.x_min, grid.x_max, grid.n_points), kBoundCut);
}

std::vector<FdBoundState> fd_bound_states(const MorseParams& p, const Grid1D& grid, Index k) {
  const Index n1 = grid.n_points;
  const FdMatrix m1 = build(p, grid.x_min, grid.x_max, n1);
  const FdMatrix m2 = build(p, grid.x_min, grid.x_max, 2 * (n1 + 1) - 1);
  const FdMatrix m4 = build(p, grid.x_min, grid.x_max, 4 * (n1 + 1) - 1);
  const Index available = sturm_count(m1, kBoundCut);
  if (k > available) {
    throw ConvergenceError("fd_bound_states: grid supports only " + std::to_string(available) +
                           " bound states");
  }
  const double floor = -p.V0 - 1.0;
  const auto e1 = lowest_eigenvalues(m1, k, floor);
  const auto e2 = lowest_eigenvalues(m2, k, floor);
  const auto e4 = lowest_eigenvalues(m4, k, floor);

  std::vector<FdBoundState> out;
  for (Index j = 0; j < k; ++j) {
    const auto i = static_cast<std::size_t>(j);
    const double r1 = (4.0 * e2[i] - e1[i]) / 3.0;
    const double r2 = (4.0 * e4[i] - e2[i]) / 3.0;
    FdBoundState s;
    s.energy = (16.0 * r2 - r1) / 15.0;
    s.error_estimate = std::abs(r2 - r1);
    if (s.error_estimate > 1e-7 * std::abs(s.energy)) {
      throw ConvergenceError("fd_bound_states: Richardson estimates disagree for state " + std::to_string(j));
    }
    s.x = m1.x;
    s.psi = inverse_iteration(m1, e1[i]);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

struct XiRange {
  double t_lo;
  double t_hi;
};

// ln xi limits outside which phi_n phi_m is below e^-80 of its scale.
XiRange xi_range(const MorseParams& p, Index n, Index m) {
  const double two_s = 2.0 * p.gamma + 1.0;
  const double lo = -80.0 / two_s;
  const double deg = two_s + static_cast<double>(n + m) + 4.0;
  double z = std::max(10.0, 2.0 * deg);
  while (-z + deg * std::log(z) > -80.0) z *= 1.1;
  return {lo, std::log(z)};
}

template <typename F>
double integrate_ln_xi(const MorseParams& p, Index n, Index m, F&& integrand) {
  const XiRange r = xi_range(p, n, m);
  const auto panels = static_cast<Index>(std::ceil((r.t_hi - r.t_lo) / 0.5));
  // dx = dt / alpha with t = ln xi
  return integrate_composite(integrand, r.t_lo, r.t_hi, panels) / p.alpha;
}

double log_norm(const MorseParams& p, Index n) {
  const double nn = static_cast<double>(n);
  return 0.5 * (log_gamma_real(nn + 1.0) + std::log(p.alpha) - log_gamma_real(nn + 2.0 * p.gamma + 1.0));
}

}  // namespace

double numeric_overlap(const MorseParams& p, Index n, Index m) {
  const double s = p.gamma + 0.5;
  const double k = 2.0 * p.gamma;
  const double ln_nm = log_norm(p, n) + log_norm(p, m);
  return integrate_ln_xi(p, n, m, [&](double t) {
    const double z = std::exp(t);
    const double w = std::exp(ln_nm + 2.0 * s * t - z);
    return w * laguerre(n, k, z) * laguerre(m, k, z);
  });
}

double numeric_matrix_element(const MorseParams& p, Index n, Index m) {
  const double s = p.gamma + 0.5;
  const double k = 2.0 * p.gamma;
  const double ln_nm = log_norm(p, n) + log_norm(p, m);
  const double scale = std::sqrt(8.0 * p.V0) / p.alpha;  // xi = scale e^{-alpha x}
  return integrate_ln_xi(p, n, m, [&](double t) {
    const double z = std::exp(t);
    const double w = std::exp(ln_nm + 2.0 * s * t - z);
    const double Ln = laguerre(n, k, z);
    const double Lm = laguerre(m, k, z);
    const double dLm = -laguerre(m - 1, k + 1.0, z);
    const double d2Lm = laguerre(m - 2, k + 2.0, z);
    // (xi d/dxi)^2 applied to xi^s e^{-xi/2} L_m, divided by xi^s e^{-xi/2}
    const double u = s - 0.5 * z;
    const double theta2 = (u * u - 0.5 * z) * Lm + z * (2.0 * s + 1.0 - z) * dLm + z * z * d2Lm;
    const double x = -std::log(z / scale) / p.alpha;
    const double kinetic = -0.5 * p.alpha * p.alpha * theta2;
    return w * Ln * (kinetic + potential(p, x) * Lm);
  });
}

}  // namespace morsesusy
