#include "morsesusy/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "morsesusy/morse.hpp"
#include "morsesusy/tridiagonal.hpp"

namespace morsesusy {

namespace {

// ln|Gamma(x)| and the sign of Gamma(x) for real x off the poles.
double log_gamma_abs_real(double x) {
  return x > 0.0 ? log_gamma_real(x) : log_gamma_abs(Complex(x, 0.0));
}

double gamma_sign(double x) {
  if (x > 0.0) return 1.0;
  return (static_cast<long long>(std::ceil(-x)) % 2 == 0) ? 1.0 : -1.0;
}

bool near_integer(double x) { return std::abs(x - std::round(x)) <= 1e-12 * std::max(1.0, std::abs(x)); }

// x < y strictly, with equality up to rounding counted as not below (the m < D convention).
bool below(double x, double y) { return y - x > 1e-12 * std::max(1.0, std::abs(y)); }

}  // namespace

Index bound_state_count(const MorseParams& p) {
  if (!(p.D > 0.0)) return 0;
  if (near_integer(p.D)) return static_cast<Index>(std::llround(p.D));
  return static_cast<Index>(std::floor(p.D + 1.0));
}

double bound_energy(const MorseParams& p, Index m) {
  const double mm = static_cast<double>(m);
  return p.energy_unit() * mm * (2.0 * p.D - mm);
}

Eigen::VectorXd truncation_eigenvalues(const MorseParams& p, Index N) {
  return eigenvalues(truncate(shifted_operator(p), N));
}

BoundStateSet bound_energies(const MorseParams& p) {
  BoundStateSet set;
  set.count = bound_state_count(p);
  const Index N = set.count;
  set.energies.resize(N);
  for (Index m = 0; m < N; ++m) set.energies(m) = bound_energy(p, m);
  set.unshifted = set.energies.array() - p.shift;

  set.basis_gamma = p.D + 0.5 - static_cast<double>(N);
  const MorseParams basis = with_gamma(p, set.basis_gamma);
  const TridiagonalOperator op = shifted_operator(basis);
  if (op.b(N - 1) != 0.0) {
    throw ConvergenceError("bound_energies: the chosen basis does not truncate at N");
  }
  const Eigensystem es = eigensystem(truncate(op, N));
  set.eigenvectors = es.vectors;
  const double scale = std::max(set.energies.cwiseAbs().maxCoeff(), p.energy_unit());
  set.max_eigen_deviation = (es.values - set.energies).cwiseAbs().maxCoeff() / scale;
  if (set.max_eigen_deviation > 1e-10) {
    throw ConvergenceError("bound_energies: block eigenvalues disagree with the closed form");
  }
  return set;
}

double ground_state_wavefunction(const MorseParams& p, double x) {
  if (std::abs(p.gamma - (p.D - 0.5)) > 1e-12 * std::max(1.0, p.D)) {
    throw InvalidParameter("ground_state_wavefunction: needs gamma = D - 1/2");
  }
  const double z = xi(p, x);
  if (z == 0.0) return 0.0;
  return std::exp(0.5 * (std::log(p.alpha) - log_gamma_real(2.0 * p.D)) + p.D * std::log(z) - 0.5 * z);
}

double dual_hahn_density(double a, double b, double c, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("dual_hahn_density: lambda must be positive");
  const double ab = a + b;
  const double ac = a + c;
  const double bc = b + c;
  if (is_nonpositive_integer(ab, 1e-12) || is_nonpositive_integer(ac, 1e-12) ||
      is_nonpositive_integer(bc, 1e-12)) {
    return 0.0;
  }
  const double log_num = log_gamma_abs({a, lambda}) + log_gamma_abs({b, lambda}) + log_gamma_abs({c, lambda}) -
                         log_gamma_abs({0.0, 2.0 * lambda});
  const double log_norm = log_gamma_abs_real(ab) + log_gamma_abs_real(ac) + log_gamma_abs_real(bc);
  const double sign = gamma_sign(ab) * gamma_sign(ac) * gamma_sign(bc);
  return sign * std::exp(2.0 * log_num - log_norm - std::log(2.0 * std::numbers::pi));
}

std::vector<double> dual_hahn_discrete_weights(double a, double b, double c) {
  std::vector<double> w;
  if (!(a < 0.0)) return w;
  const double log_pre = log_gamma_real(b - a) + log_gamma_real(c - a) - log_gamma_real(-2.0 * a) -
                         log_gamma_real(b + c);
  double term = std::exp(log_pre);
  for (Index m = 0; below(static_cast<double>(m), -a); ++m) {
    w.push_back(term);
    const double k = static_cast<double>(m);
    term *= -(2.0 * a + k) * (a + 1.0 + k) * (a + b + k) * (a + c + k) /
            ((a + k) * (a - b + 1.0 + k) * (a - c + 1.0 + k) * (k + 1.0));
  }
  return w;
}

double continuous_density_lambda(const MorseParams& p, double lambda) {
  const double b = p.gamma + 0.5;
  return dual_hahn_density(-p.D, b, b, lambda);
}

double continuous_density(const MorseParams& p, double energy) {
  const double l2 = lambda_squared(p, energy);
  if (!(l2 > 0.0)) throw DomainError("continuous_density: energy at or below the continuum edge");
  const double lambda = std::sqrt(l2);
  return continuous_density_lambda(p, lambda) / (p.alpha * p.alpha * lambda);
}

std::vector<double> discrete_weights(const MorseParams& p) {
  const double D = p.D;
  const double g = p.gamma;
  const double s = depth_factor(p, 0.0);
  double term = std::exp(2.0 * log_gamma_real(g + 0.5 + D) - log_gamma_real(2.0 * D) - log_gamma_real(2.0 * g + 1.0));
  std::vector<double> w;
  for (Index m = 0; below(static_cast<double>(m), D); ++m) {
    w.push_back(term);
    const double k = static_cast<double>(m);
    const double h = 0.5 - D - g + k;
    term *= -(-2.0 * D + k) * (1.0 - D + k) * (s + k) * (s + k) / ((-D + k) * h * h * (k + 1.0));
  }
  return w;
}

std::vector<double> partner_discrete_weights(const MorseParams& p) {
  const double D = p.D;
  const double g = p.gamma;
  std::vector<double> w;
  if (!below(1.0, D)) return w;
  const double s1 = depth_factor(p, 1.0);
  double term =
      std::exp(2.0 * log_gamma_real(g + D - 0.5) - log_gamma_real(2.0 * D - 2.0) - log_gamma_real(2.0 * g + 1.0));
  for (Index m = 0; below(static_cast<double>(m) + 1.0, D); ++m) {
    w.push_back(term);
    const double k = static_cast<double>(m);
    const double h = 1.5 - D - g + k;
    term *= -(2.0 - 2.0 * D + k) * (2.0 - D + k) * (s1 + k) * (s1 + k) / ((k + 1.0) * (1.0 - D + k) * h * h);
  }
  return w;
}

double SpectralMeasure::density_lambda(double lambda) const {
  if (!has_continuum) return 0.0;
  return dual_hahn_density(a, b, b, lambda);
}

double SpectralMeasure::density(double energy) const {
  const double l2 = 2.0 * energy / (alpha * alpha) - D * D;
  if (!(l2 > 0.0)) throw DomainError("density: energy at or below the continuum edge");
  const double lambda = std::sqrt(l2);
  return density_lambda(lambda) / (alpha * alpha * lambda);
}

SemiInfiniteOptions SpectralMeasure::quadrature_options() const {
  // Gamma(a + i l) has poles at l = i (a + k). A pole sitting on the axis is cancelled
  // by 1/Gamma(2 i l) and does not count.
  double dist = b;
  for (Index k = 0; k < 64; ++k) {
    const double r = std::abs(a + static_cast<double>(k));
    if (r > 1e-8) dist = std::min(dist, r);
  }
  SemiInfiniteOptions opt;
  opt.singular_distance = dist;
  return opt;
}

namespace {

SpectralMeasure make_measure(const MorseParams& p, double a, const std::vector<double>& weights, Index offset) {
  SpectralMeasure mu;
  mu.continuous_edge = p.shift;
  mu.alpha = p.alpha;
  mu.D = p.D;
  mu.a = a;
  mu.b = p.gamma + 0.5;
  // 1/Gamma(a + b)^2 kills the continuum when a + b is a non-positive integer
  mu.has_continuum = !is_nonpositive_integer(a + mu.b, 1e-12);
  for (std::size_t m = 0; m < weights.size(); ++m) {
    const Index mi = static_cast<Index>(m);
    mu.discrete.push_back({mi, bound_energy(p, mi + offset), weights[m]});
  }
  return mu;
}

}  // namespace

SpectralMeasure spectral_measure(const MorseParams& p) {
  return make_measure(p, -p.D, discrete_weights(p), 0);
}

SpectralMeasure partner_measure(const MorseParams& p) {
  return make_measure(p, 1.0 - p.D, partner_discrete_weights(p), 1);
}

double total_mass(const SpectralMeasure& mu) {
  double mass = 0.0;
  for (const auto& pt : mu.discrete) mass += pt.weight;
  if (mu.has_continuum) {
    mass += integrate_semi_infinite([&mu](double l) { return mu.density_lambda(l); }, mu.quadrature_options());
  }
  return mass;
}

double density_integral_energy(const SpectralMeasure& mu, double e0, double e1) {
  // sqrt-type edge behaviour: substitute E = edge + u^2 to keep the integrand smooth
  const double u0 = std::sqrt(e0 - mu.continuous_edge);
  const double u1 = std::sqrt(e1 - mu.continuous_edge);
  return integrate_composite(
      [&mu](double u) { return 2.0 * u * mu.density(mu.continuous_edge + u * u); }, u0, u1, 8);
}

double density_integral_lambda(const SpectralMeasure& mu, double e0, double e1) {
  const auto lam = [&mu](double e) { return std::sqrt(2.0 * e / (mu.alpha * mu.alpha) - mu.D * mu.D); };
  return integrate_composite([&mu](double l) { return mu.density_lambda(l); }, lam(e0), lam(e1), 8);
}

OrthogonalityReport verify_orthogonality(const SpectralMeasure& mu, const PolyFamily& fam, Index n_max) {
  OrthogonalityReport report;
  report.order = std::min(n_max, family_extent(fam, n_max) - 1);
  const Index size = report.order + 1;
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(size, size);
  for (const auto& pt : mu.discrete) {
    const Eigen::VectorXd P = evaluate(fam, pt.energy, report.order);
    gram.noalias() += pt.weight * P * P.transpose();
  }
  if (mu.has_continuum) {
    const auto integrand = [&](double l) -> Eigen::MatrixXd {
      const Eigen::VectorXd P = evaluate(fam, mu.energy_at(l), report.order);
      return mu.density_lambda(l) * P * P.transpose();
    };
    gram += integrate_semi_infinite(integrand, mu.quadrature_options());
  }
  report.max_deviation = (gram - Eigen::MatrixXd::Identity(size, size)).cwiseAbs().maxCoeff();
  report.gram = std::move(gram);
  return report;
}

}  // namespace morsesusy
