#pragma once

#include <cstdint>
#include <vector>

#include "creutz/quench.hpp"

namespace creutz {

// Seeded classical noise on the post-quench phase: count samples eta_i drawn
// uniformly from [-fraction*|base_theta2|, +fraction*|base_theta2|].
// Regeneration with the same seed is bit-identical.
struct NoiseEnsemble {
  double base_theta2 = 0.0;
  double fraction = 0.1;
  int count = 1000;
  std::uint64_t seed = 0;
  std::vector<double> samples;
};

NoiseEnsemble sample_noise(double base_theta2, double fraction, int count, std::uint64_t seed);

// Mixed-state echo via relative purity: the arithmetic mean over samples of
// the pure echo with theta2 -> theta2 + eta_i. Requires t >= 0.
double mixed_le(const QuenchSpec& spec, const NoiseEnsemble& ens, double t);

// Mean over samples of the post-quench energy spread of theta1 -> theta2+eta.
double ensemble_mean_variance(const QuenchSpec& spec, const NoiseEnsemble& ens);

// Channel bound (2 theta^2 / pi^2) / mean energy spread with the echo
// parametrized as L(t) = cos(theta); the echo is clamped into [0, 1] before
// taking arccos. Requires t_eval > 0 and a positive mean spread.
double noisy_qsl_bound(const QuenchSpec& spec, const NoiseEnsemble& ens, double t_eval);

}  // namespace creutz
