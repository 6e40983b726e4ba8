#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "morsesusy/morse.hpp"
#include "morsesusy/orthopoly.hpp"
#include "morsesusy/quadrature.hpp"
#include "morsesusy/spectrum.hpp"
#include "morsesusy/susy.hpp"

using namespace morsesusy;

namespace {

const MorseParams kDeep = derive_params(8.0, 1.0, 0.0);
const MorseParams kShallow = derive_params(2.0, 1.0, 0.25);
const MorseParams kSteep = derive_params(12.5, 2.0, -0.25);

double discrete_mass(const SpectralMeasure& mu) {
  double s = 0.0;
  for (const auto& m : mu.discrete) s += m.weight;
  return s;
}

}  // namespace

TEST_CASE("bound state count") {
  CHECK(bound_state_count(kDeep) == 4);
  CHECK(bound_state_count(derive_params(0.245, 1.0, 0.0)) == 1);
  CHECK(bound_state_count(derive_params(0.1250001, 1.0, 0.0)) == 1);
  CHECK(bound_state_count(kShallow) == 2);
  // integer D: the level m = D sits at the continuum edge and is not a bound state
  CHECK(bound_state_count(kSteep) == 2);
}

TEST_CASE("bound energies") {
  const BoundStateSet bs = bound_energies(kDeep);
  REQUIRE(bs.count == 4);
  const double want[] = {0.0, 3.0, 5.0, 6.0};
  for (Index m = 0; m < 4; ++m) {
    CHECK(bs.energies(m) == doctest::Approx(want[m]).epsilon(1e-12).scale(1.0));
    CHECK(bs.unshifted(m) == doctest::Approx(want[m] - 6.125).epsilon(1e-12));
    CHECK(bound_energy(kDeep, m) == doctest::Approx(want[m]).epsilon(1e-15).scale(1.0));
  }
  CHECK(bs.max_eigen_deviation <= 1e-10);
  CHECK(bs.basis_gamma == doctest::Approx(0.0).scale(1.0));

  const Eigen::VectorXd ev = truncation_eigenvalues(kDeep, 4);
  CHECK(ev.sum() == doctest::Approx(14.0).epsilon(1e-14));
  for (Index m = 0; m < 4; ++m) CHECK(ev(m) == doctest::Approx(want[m]).epsilon(1e-10).scale(1.0));

  // any admissible basis scale gives the same levels
  for (const auto& p : {kShallow, kSteep, derive_params(30.0, 0.7, 1.3)}) {
    const BoundStateSet s = bound_energies(p);
    CHECK(s.count == bound_state_count(p));
    for (Index m = 0; m < s.count; ++m) {
      CHECK(s.energies(m) == doctest::Approx(bound_energy(p, m)).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("ground state wavefunction") {
  const MorseParams p = with_gamma(kDeep, kDeep.D - 0.5);
  CHECK_THROWS_AS(ground_state_wavefunction(kDeep, 0.0), InvalidParameter);
  const double norm = integrate_composite(
      [&p](double x) { return std::pow(ground_state_wavefunction(p, x), 2); }, -10.0, 40.0, 100);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ground_state_wavefunction(p, 60.0) < 1e-20);
  // maximum at xi = 2D
  const double x_peak = std::log(std::sqrt(8.0 * p.V0) / (2.0 * p.D)) / p.alpha;
  const double h = 1e-3;
  CHECK(ground_state_wavefunction(p, x_peak) > ground_state_wavefunction(p, x_peak - h));
  CHECK(ground_state_wavefunction(p, x_peak) > ground_state_wavefunction(p, x_peak + h));
}

TEST_CASE("discrete weights") {
  const auto w = discrete_weights(kDeep);
  REQUIRE(w.size() == 4);
  CHECK(w[0] == doctest::Approx(0.05).epsilon(1e-13));
  CHECK(w[1] == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(w[2] == doctest::Approx(0.45).epsilon(1e-13));
  CHECK(w[3] == doctest::Approx(0.25).epsilon(1e-13));
  const auto wp = partner_discrete_weights(kDeep);
  REQUIRE(wp.size() == 3);
  CHECK(wp[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(wp[1] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(wp[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

  // the general dual Hahn form specializes term by term
  for (const auto& p : {kDeep, kShallow, kSteep}) {
    const auto direct = discrete_weights(p);
    const auto general = dual_hahn_discrete_weights(-p.D, p.gamma + 0.5, p.gamma + 0.5);
    REQUIRE(direct.size() == general.size());
    for (std::size_t m = 0; m < direct.size(); ++m) CHECK(direct[m] == doctest::Approx(general[m]).epsilon(1e-12));
    const auto partner = partner_discrete_weights(p);
    const auto partner_general = dual_hahn_discrete_weights(1.0 - p.D, p.gamma + 0.5, p.gamma + 0.5);
    REQUIRE(partner.size() == partner_general.size());
    for (std::size_t m = 0; m < partner.size(); ++m) {
      CHECK(partner[m] == doctest::Approx(partner_general[m]).epsilon(1e-12));
    }
  }

  // 40-digit reference weights
  const auto ws = discrete_weights(kShallow);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0] == doctest::Approx(0.72424792082084841).epsilon(1e-13));
  CHECK(ws[1] == doctest::Approx(0.26072925149550543).epsilon(1e-13));
  CHECK(partner_discrete_weights(kShallow)[0] == doctest::Approx(0.92703733865068596).epsilon(1e-13));
  const auto wt = discrete_weights(kSteep);
  REQUIRE(wt.size() == 2);
  CHECK(wt[0] == doctest::Approx(0.12070798680347473).epsilon(1e-13));
  CHECK(wt[1] == doctest::Approx(0.47317530826962096).epsilon(1e-13));
  REQUIRE(partner_discrete_weights(kSteep).size() == 1);
  CHECK(partner_discrete_weights(kSteep)[0] == doctest::Approx(0.46351866932534298).epsilon(1e-13));
}

TEST_CASE("continuous density") {
  for (const auto& p : {kShallow, kSteep}) {
    for (double e : {p.shift + 1e-6, p.shift + 0.5, p.shift + 10.0}) CHECK(continuous_density(p, e) > 0.0);
    CHECK_THROWS_AS(continuous_density(p, p.shift), DomainError);
    // energy and lambda forms differ by the Jacobian alpha^2 lambda
    const double lam = 0.8;
    const double e = 0.5 * p.alpha * p.alpha * (lam * lam + p.D * p.D);
    CHECK(continuous_density(p, e) * p.alpha * p.alpha * lam ==
          doctest::Approx(continuous_density_lambda(p, lam)).epsilon(1e-12));
  }
  // the density vanishes identically when a normalizing gamma sits at a pole
  CHECK(continuous_density_lambda(kDeep, 0.7) == 0.0);
}

TEST_CASE("mass normalization") {
  SUBCASE("40-digit reference masses") {
    CHECK(total_mass(spectral_measure(kShallow)) - discrete_mass(spectral_measure(kShallow)) ==
          doctest::Approx(0.015022827683646168).epsilon(1e-9));
    CHECK(total_mass(partner_measure(kShallow)) - discrete_mass(partner_measure(kShallow)) ==
          doctest::Approx(0.072962661349314041).epsilon(1e-9));
    CHECK(total_mass(spectral_measure(kSteep)) - discrete_mass(spectral_measure(kSteep)) ==
          doctest::Approx(0.40611670492690431).epsilon(1e-9));
    CHECK(total_mass(partner_measure(kSteep)) - discrete_mass(partner_measure(kSteep)) ==
          doctest::Approx(0.53648133067465702).epsilon(1e-9));
  }
  for (const auto& p : {kDeep, kShallow, kSteep, derive_params(30.0, 0.7, 1.3)}) {
    CHECK(total_mass(spectral_measure(p)) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(total_mass(partner_measure(p)) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(discrete_mass(spectral_measure(p)) <= 1.0 + 1e-14);
  }
  CHECK(discrete_mass(spectral_measure(kDeep)) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("measure layout") {
  const SpectralMeasure mu = spectral_measure(kDeep);
  const SpectralMeasure mp = partner_measure(kDeep);
  CHECK(mu.continuous_edge == doctest::Approx(6.125));
  CHECK(mp.continuous_edge == doctest::Approx(6.125));
  REQUIRE(mp.discrete.size() == 3);
  // the partner keeps every level except the zero mode
  for (std::size_t m = 0; m < mp.discrete.size(); ++m) {
    CHECK(mp.discrete[m].energy == doctest::Approx(mu.discrete[m + 1].energy).epsilon(1e-14));
  }
  CHECK(mp.discrete[0].energy == doctest::Approx(3.0));
  CHECK(mp.discrete[2].energy == doctest::Approx(6.0));
}

TEST_CASE("change of variables in the continuous part") {
  for (const auto& p : {kShallow, kSteep}) {
    const SpectralMeasure mu = spectral_measure(p);
    const double e0 = mu.continuous_edge;
    CHECK(density_integral_energy(mu, e0 + 0.1, e0 + 3.0) ==
          doctest::Approx(density_integral_lambda(mu, e0 + 0.1, e0 + 3.0)).epsilon(1e-10));
    CHECK(density_integral_energy(mu, e0 + 2.0, e0 + 20.0) ==
          doctest::Approx(density_integral_lambda(mu, e0 + 2.0, e0 + 20.0)).epsilon(1e-10));
  }
}

TEST_CASE("Gram matrices are the identity") {
  for (const auto& p : {kShallow, kSteep}) {
    const OrthogonalityReport r = verify_orthogonality(spectral_measure(p), morse_family(p), 12);
    CHECK(r.order == 12);
    CHECK(r.gram(0, 0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(r.gram(0, 1)) < 1e-8);
    CHECK(r.max_deviation < 1e-8);
    const OrthogonalityReport rp = verify_orthogonality(partner_measure(p), morse_partner_family(p), 12);
    CHECK(rp.order == 12);
    CHECK(rp.max_deviation < 1e-8);
  }
  // at D = 3.5 the measure is four points and only P_0 .. P_3 exist
  const OrthogonalityReport r = verify_orthogonality(spectral_measure(kDeep), morse_family(kDeep), 12);
  CHECK(r.order == 3);
  CHECK(r.max_deviation < 1e-12);
  const OrthogonalityReport rp = verify_orthogonality(partner_measure(kDeep), morse_partner_family(kDeep), 12);
  CHECK(rp.order == 2);
  CHECK(rp.max_deviation < 1e-12);
}
