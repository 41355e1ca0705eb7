#include "creutz/noise.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "creutz/qsl.hpp"

namespace creutz {

namespace {
constexpr double pi = std::numbers::pi;

// engine output -> uniform double in [0, 1); fixed mapping keeps the ensemble
// bit-identical across platforms
double canonical_uniform(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1p-53;
}
}  // namespace

NoiseEnsemble sample_noise(double base_theta2, double fraction, int count, std::uint64_t seed) {
  if (count < 1) throw invalid_input_error("noise ensemble needs count >= 1");
  if (!(fraction >= 0.0)) throw invalid_input_error("noise fraction must be nonnegative");
  NoiseEnsemble ens;
  ens.base_theta2 = base_theta2;
  ens.fraction = fraction;
  ens.count = count;
  ens.seed = seed;
  ens.samples.resize(static_cast<std::size_t>(count));
  const double half_range = fraction * std::abs(base_theta2);
  std::mt19937_64 eng(seed);
  for (double& eta : ens.samples) eta = (2.0 * canonical_uniform(eng) - 1.0) * half_range;
  return ens;
}

double mixed_le(const QuenchSpec& spec, const NoiseEnsemble& ens, double t) {
  if (!(t >= 0.0)) throw invalid_input_error("mixed_le needs t >= 0");
  double sum = 0.0;
  for (const double eta : ens.samples) {
    QuenchSpec perturbed = spec;
    perturbed.theta2 = spec.theta2 + eta;
    sum += loschmidt_echo(perturbed, t).le;
  }
  return sum / static_cast<double>(ens.samples.size());
}

double ensemble_mean_variance(const QuenchSpec& spec, const NoiseEnsemble& ens) {
  double sum = 0.0;
  for (const double eta : ens.samples) {
    QuenchSpec perturbed = spec;
    perturbed.theta2 = spec.theta2 + eta;
    sum += energy_variance(perturbed);
  }
  return sum / static_cast<double>(ens.samples.size());
}

double noisy_qsl_bound(const QuenchSpec& spec, const NoiseEnsemble& ens, double t_eval) {
  if (!(t_eval > 0.0)) throw invalid_input_error("noisy_qsl_bound needs t_eval > 0");
  const double mean_de = ensemble_mean_variance(spec, ens);
  if (!(mean_de > 0.0))
    throw invalid_input_error("noisy_qsl_bound needs a positive mean energy variance");
  double le = mixed_le(spec, ens, t_eval);
  le = std::min(1.0, std::max(0.0, le));
  const double theta = std::acos(le);
  return (2.0 * theta * theta / (pi * pi)) / mean_de;
}

}  // namespace creutz
