#include "creutz/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "creutz/noise.hpp"
#include "creutz/oracle.hpp"
#include "creutz/qsl.hpp"
#include "creutz/quench.hpp"

namespace creutz {

namespace {

constexpr double pi = std::numbers::pi;

double uniform(std::mt19937_64& eng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1p-53);
}

ModelParams random_params(std::mt19937_64& eng) {
  return {uniform(eng, 0.2, 3.0), uniform(eng, 0.05, 3.0), uniform(eng, -pi, pi)};
}

VerifyCheck check_eigenvalues(std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const ModelParams p = random_params(eng);
    const double k = uniform(eng, 0.0, 2.0 * pi);
    const BandEnergies bands = band_energies(p, k);
    const auto sys = oracle::numeric_eigensystem(oracle::hamiltonian_block(p.K, p.M, p.theta, k));
    worst = std::max(worst, std::abs(bands.eps_alpha - sys.val_lo));
    worst = std::max(worst, std::abs(bands.eps_beta - sys.val_hi));
  }
  return {"eigenvalue_equivalence", worst, 1e-10, worst <= 1e-10};
}

VerifyCheck check_diagonalization(std::uint64_t seed, bool wrong_branch) {
  std::mt19937_64 eng(seed);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const ModelParams p = random_params(eng);
    const double k = uniform(eng, 0.0, 2.0 * pi);
    const BandEnergies bands = band_energies(p, k);
    const double scale = std::abs(bands.eps_alpha) + std::abs(bands.eps_beta) + 1.0;
    if (bands.eps_beta - bands.eps_alpha <= 1e-8 * scale) continue;  // degenerate
    double gamma = bogoliubov_angle(p, k);
    if (wrong_branch) {
      const BlockEntries e = block_entries(p, k);
      const double den = e.eps_q - e.eps_p;
      gamma = den == 0.0 ? pi / 2.0 : std::atan(2.0 * e.eps_qp / den);
    }
    const auto block = oracle::hamiltonian_block(p.K, p.M, p.theta, k);
    const double cs = std::cos(gamma / 2.0);
    const double sn = std::sin(gamma / 2.0);
    // G^T H G with G = [[cos, -sin], [sin, cos]]
    const double off = (block.h11 - block.h00) * sn * cs +
                       block.h01 * (cs * cs - sn * sn);
    const double d00 = block.h00 * cs * cs + 2.0 * block.h01 * sn * cs + block.h11 * sn * sn;
    const double d11 = block.h00 * sn * sn - 2.0 * block.h01 * sn * cs + block.h11 * cs * cs;
    const double dev = std::max({std::abs(off), std::abs(d00 - bands.eps_alpha),
                                 std::abs(d11 - bands.eps_beta)}) /
                       scale;
    worst = std::max(worst, dev);
  }
  return {"diagonalization_residual", worst, 1e-10, worst <= 1e-10};
}

// The initial state is the lower eigenvector of H_i(k); near a degenerate
// initial block that vector is ill-conditioned and closed form and oracle may
// legitimately pick different superpositions, so those draws are re-rolled.
bool initial_block_degenerate(const ModelParams& p, double k) {
  const BandEnergies bands = band_energies(p, k);
  const double scale = std::abs(bands.eps_alpha) + std::abs(bands.eps_beta) + 1.0;
  return bands.eps_beta - bands.eps_alpha <= 1e-3 * scale;
}

VerifyCheck check_mode_le(std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = random_params(eng);
    const double theta2 = uniform(eng, -pi, pi);
    const double k = uniform(eng, 0.0, 2.0 * pi);
    const double t = uniform(eng, 0.0, 20.0);
    if (initial_block_degenerate(p, k)) {
      --i;
      continue;
    }
    const QuenchSpec spec{p.K, p.M, p.theta, theta2, 2};
    const ModeAmplitude amp = mode_amplitude(spec, k);
    const double st = std::sin(amp.gap * t / 2.0);
    const double closed = 1.0 - amp.A * st * st;
    const double numeric = oracle::numeric_mode_le(p.K, p.M, p.theta, theta2, k, t);
    worst = std::max(worst, std::abs(closed - numeric));
  }
  return {"mode_le_equivalence", worst, 1e-9, worst <= 1e-9};
}

VerifyCheck check_unitarity(std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = random_params(eng);
    const double theta2 = uniform(eng, -pi, pi);
    const double k = uniform(eng, 0.0, 2.0 * pi);
    const double t = uniform(eng, 0.0, 20.0);
    const auto evo = oracle::numeric_mode_evolution(p.K, p.M, p.theta, theta2, k, t);
    worst = std::max(worst, std::abs(evo.norm_sq - 1.0));
  }
  return {"evolution_unitarity", worst, 1e-13, worst <= 1e-13};
}

VerifyCheck check_energy_variance(std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const ModelParams p = random_params(eng);
    const double theta2 = uniform(eng, -pi, pi);
    const int L = 2 + static_cast<int>(uniform(eng, 0.0, 11.0));
    bool degenerate = false;
    for (int j = 0; j < L && !degenerate; ++j)
      degenerate = initial_block_degenerate(p, 2.0 * pi * j / L);
    if (degenerate) {
      --i;
      continue;
    }
    const QuenchSpec spec{p.K, p.M, p.theta, theta2, L};
    const double closed = energy_variance(spec);
    const double numeric = oracle::numeric_energy_variance(p.K, p.M, p.theta, theta2, L);
    worst = std::max(worst, std::abs(closed - numeric) / (1.0 + numeric));
  }
  return {"energy_variance_equivalence", worst, 1e-10, worst <= 1e-10};
}

VerifyCheck check_zero_solutions() {
  double worst = 0.0;
  for (const int L : {22, 51}) {
    for (const ZeroSolution& sol : allowed_modes(1.0, 1.0, 0.25 * pi, L)) {
      if (!(sol.gap > 0.0)) continue;
      // residual of the constraint equation at (k, theta2)
      const double eps_qp = 2.0 * std::cos(sol.k) + 1.0;
      const double lhs = eps_qp * eps_qp;
      const double rhs_val = -std::pow(2.0 * std::sin(sol.k), 2) * std::sin(0.25 * pi) *
                             std::sin(sol.theta2);
      worst = std::max(worst, std::abs(lhs - rhs_val) / std::max(1.0, lhs));
      const QuenchSpec spec{1.0, 1.0, 0.25 * pi, sol.theta2, L};
      worst = std::max(worst, std::abs(mode_amplitude(spec, sol.k).A - 1.0));
      // the echo itself must vanish to <= 1e-12 at critical times; report it
      // on the common 1e-10 scale
      for (const double t : critical_times(sol, 2))
        worst = std::max(worst, loschmidt_echo(spec, t).le * 1e2);
    }
  }
  return {"zero_solution_exactness", worst, 1e-10, worst <= 1e-10};
}

VerifyCheck check_noise_determinism(std::uint64_t seed) {
  const NoiseEnsemble a = sample_noise(-0.5, 0.1, 1000, seed);
  const NoiseEnsemble b = sample_noise(-0.5, 0.1, 1000, seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i)
    worst = std::max(worst, std::abs(a.samples[i] - b.samples[i]));
  const QuenchSpec spec{1.0, 1.0, 0.25 * pi, -0.5, 20};
  worst = std::max(worst, std::abs(mixed_le(spec, a, 1.0) - mixed_le(spec, b, 1.0)));
  return {"noise_seed_determinism", worst, 1e-12, worst <= 1e-12};
}

}  // namespace

std::vector<VerifyCheck> run_verification(const VerifyOptions& opt) {
  std::vector<VerifyCheck> checks;
  checks.push_back(check_eigenvalues(opt.seed));
  checks.push_back(check_diagonalization(opt.seed + 1, opt.inject_wrong_branch));
  checks.push_back(check_mode_le(opt.seed + 2));
  checks.push_back(check_unitarity(opt.seed + 3));
  checks.push_back(check_energy_variance(opt.seed + 4));
  checks.push_back(check_zero_solutions());
  checks.push_back(check_noise_determinism(opt.seed + 5));
  return checks;
}

bool all_passed(const std::vector<VerifyCheck>& checks) {
  for (const VerifyCheck& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace creutz
