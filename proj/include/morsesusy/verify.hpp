#pragma once

// The verification suite behind `morsesusy verify`: every closed form checked against its
// recursion or quadrature counterpart at one parameter set.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morsesusy/morse_params.hpp"

namespace morsesusy {

struct CheckResult {
  std::string name;
  bool passed = false;
  double deviation = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct VerifyOptions {
  Index n_max = 12;
  bool oracle = false;
  /// Test hook: multiply b_k by 1.5 before factorizing.
  std::optional<Index> corrupt_b;
  /// Energies for the polynomial checks; empty means 0, 0.5, ..., 30.
  std::vector<double> energy_grid;
  std::uint32_t seed = 20240611;
  int identity_draws = 100;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

std::vector<double> default_energy_grid();

/// Largest relative gap between the two sides of the Thomae relation over `draws` random
/// pole-free parameter sets.
double thomae_sweep(std::uint32_t seed, int draws);

/// Same for the kernel summation identity.
double summation_sweep(std::uint32_t seed, int draws);

VerificationReport run_verification(const MorseParams& p, const VerifyOptions& opt);

}  // namespace morsesusy
