#include "creutz/qsl.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace creutz {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();
}  // namespace

double first_divergence_time(const ZeroSolution& sol) {
  if (!(sol.gap > 0.0)) return inf;
  return pi / sol.gap;
}

TauFExtrema tau_f_extrema(double K, double M, double theta1, int L) {
  const std::vector<ZeroSolution> sols = allowed_modes(K, M, theta1, L);
  TauFExtrema ext{};
  ext.zero_mode_present = false;
  bool have = false;
  for (const ZeroSolution& sol : sols) {
    if (!(sol.gap > 0.0)) {
      ext.zero_mode_present = true;
      continue;
    }
    if (!have || sol.gap < ext.sol_max.gap) ext.sol_max = sol;
    if (!have || sol.gap > ext.sol_min.gap) ext.sol_min = sol;
    have = true;
  }
  if (!have)
    throw no_solution_error("no finite-gap exact-zero solutions for these parameters");
  ext.tau_fmax = pi / ext.sol_max.gap;
  ext.tau_fmin = pi / ext.sol_min.gap;
  return ext;
}

double tau_fmax_asymptote(double K, double M, int L) {
  if (L < 2) throw invalid_input_error("tau_fmax_asymptote needs L >= 2");
  const double k_c = gap_closing_modes({K, M, 0.0}).first;
  const double j_star = std::round(k_c * L / (2.0 * pi));
  const double dist = std::abs(2.0 * pi * j_star / L - k_c);
  // commensurate L: the zero mode sits on the grid and the asymptote diverges
  if (dist <= 1e-9) return inf;
  const double slope = std::abs(2.0 * K * std::sin(k_c));
  return pi / (2.0 * slope * dist);
}

double tau_c_asymptote(double K, double M, double theta1) {
  validate({K, M, theta1});
  const double sin_t1 = std::sin(theta1);
  // (2Kc + M)^2 = 4K^2 (1 - c^2) sin(theta1) as a quadratic in c = cos k
  const double a = 4.0 * K * K * (1.0 + sin_t1);
  const double b = 4.0 * K * M;
  const double c0 = M * M - 4.0 * K * K * sin_t1;
  const double disc = b * b - 4.0 * a * c0;
  if (!(disc >= 0.0)) throw no_solution_error("no real root for the tau_c quadratic");
  const double root1 = (-b + std::sqrt(disc)) / (2.0 * a);
  const double root2 = (-b - std::sqrt(disc)) / (2.0 * a);
  double best_sin_sq = -1.0;
  for (const double c : {root1, root2}) {
    if (std::abs(c) > 1.0) continue;
    const double sin_sq = 1.0 - c * c;
    if (sin_sq > best_sin_sq) best_sin_sq = sin_sq;
  }
  if (best_sin_sq <= 0.0) throw no_solution_error("tau_c quadratic has no root with sin k != 0");
  return pi / (2.0 * 2.0 * K * std::sqrt(best_sin_sq) * std::sqrt(1.0 + sin_t1));
}

double energy_variance(const QuenchSpec& spec) {
  if (spec.L < 1) throw invalid_input_error("energy_variance needs L >= 1");
  const ModelParams pre = spec.pre();
  const ModelParams post = spec.post();
  double sum = 0.0;
  for (int j = 0; j < spec.L; ++j) {
    const double k = 2.0 * pi * j / spec.L;
    const double s = std::sin(bogoliubov_angle(pre, k) - bogoliubov_angle(post, k));
    const double gap = band_gap(post, k);
    sum += 0.25 * (s * s) * (gap * gap);
  }
  return std::sqrt(sum);
}

double qsl_time(double le_value, double delta_e) {
  if (!(delta_e > 0.0)) throw invalid_input_error("qsl_time needs a positive energy variance");
  if (!(le_value >= 0.0) || le_value > 1.0)
    throw invalid_input_error("qsl_time needs an echo value in [0, 1]");
  return std::acos(std::sqrt(le_value)) / delta_e;
}

double mt_bound(double delta_e) {
  if (!(delta_e > 0.0)) throw invalid_input_error("mt_bound needs a positive energy variance");
  return pi / (2.0 * delta_e);
}

std::vector<std::pair<int, double>> qsl_vs_size(double K, double M, double theta1,
                                                ExtremumCase which, std::span<const int> L_list) {
  std::vector<std::pair<int, double>> out;
  out.reserve(L_list.size());
  for (const int L : L_list) {
    const TauFExtrema ext = tau_f_extrema(K, M, theta1, L);
    const ZeroSolution& sol = which == ExtremumCase::max ? ext.sol_max : ext.sol_min;
    const double delta_e = energy_variance({K, M, theta1, sol.theta2, L});
    out.emplace_back(L, mt_bound(delta_e));
  }
  return out;
}

SweepStats sweep_stats_from_values(double theta1, std::span<const double> values, int L_min,
                                   int L_max, Normalization norm) {
  if (values.empty()) throw no_solution_error("sweep statistics need at least one sample");
  const double denom = norm == Normalization::paper ? static_cast<double>(L_max - L_min)
                                                    : static_cast<double>(values.size());
  double sum = 0.0;
  for (const double v : values) sum += v;
  const double mean = sum / denom;
  double var_sum = 0.0;
  for (const double v : values) var_sum += v * v - mean * mean;
  return {theta1, mean, var_sum / denom, static_cast<int>(values.size()), norm};
}

SweepStats qsl_sweep_stats(double K, double M, double theta1, ExtremumCase which, int L_min,
                           int L_max, int step, Normalization norm) {
  if (L_min >= L_max || step < 1) throw invalid_input_error("invalid size range for qsl sweep");
  std::vector<int> sizes;
  for (int L = L_min; L <= L_max; L += step) sizes.push_back(L);
  const auto rows = qsl_vs_size(K, M, theta1, which, sizes);
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& [L, tau] : rows) values.push_back(tau);
  return sweep_stats_from_values(theta1, values, L_min, L_max, norm);
}

}  // namespace creutz
