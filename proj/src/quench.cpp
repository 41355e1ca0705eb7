#include "creutz/quench.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace creutz {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

bool excluded_mode(double k) {
  // k on {0, pi} modulo 2*pi, where sin k vanishes and Eq. (14) is undefined
  return std::abs(std::remainder(k, pi)) <= 1e-12;
}

void check_zero_seek_phase(double theta1) {
  if (!(theta1 >= 0.0) || theta1 > pi / 2.0 + 1e-15)
    throw invalid_input_error(
        "zero-seeking operations take theta1 in [0, pi/2]; mirror negative phases by negating "
        "both theta1 and theta2");
}

}  // namespace

ModeAmplitude mode_amplitude(const QuenchSpec& spec, double k) {
  const double g1 = bogoliubov_angle(spec.pre(), k);
  const double g2 = bogoliubov_angle(spec.post(), k);
  const double two_eta = g1 - g2;
  const double s = std::sin(two_eta);
  return {k, s * s, band_gap(spec.post(), k), two_eta};
}

EchoValue loschmidt_echo(const QuenchSpec& spec, double t) {
  if (spec.L < 1) throw invalid_input_error("loschmidt_echo needs L >= 1");
  if (!(t >= 0.0)) throw invalid_input_error("loschmidt_echo needs t >= 0");
  const ModelParams pre = spec.pre();
  const ModelParams post = spec.post();
  double log_le = 0.0;
  for (int j = 0; j < spec.L; ++j) {
    const double k = 2.0 * pi * j / spec.L;
    const double two_eta = bogoliubov_angle(pre, k) - bogoliubov_angle(post, k);
    const double s_eta = std::sin(two_eta);
    const double s_t = std::sin(band_gap(post, k) * t / 2.0);
    log_le += std::log(1.0 - (s_eta * s_eta) * (s_t * s_t));
  }
  return {log_le, std::exp(log_le)};
}

LETrace rate_function(const QuenchSpec& spec, std::span<const double> times) {
  if (times.empty()) throw invalid_input_error("rate_function needs a nonempty time grid");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0)) throw invalid_input_error("rate_function times must be nonnegative");
    if (i > 0 && times[i] < times[i - 1])
      throw invalid_input_error("rate_function times must be ascending");
  }
  LETrace trace;
  trace.times.assign(times.begin(), times.end());
  trace.log_le.reserve(times.size());
  trace.rate.reserve(times.size());
  trace.divergent.reserve(times.size());
  for (const double t : times) {
    const EchoValue echo = loschmidt_echo(spec, t);
    trace.log_le.push_back(echo.log_le);
    const bool div = std::isinf(echo.log_le);
    trace.divergent.push_back(div);
    trace.rate.push_back(div ? inf : -echo.log_le / spec.L);
  }
  return trace;
}

double zero_condition_rhs(double K, double M, double theta1, double k) {
  if (excluded_mode(k)) throw invalid_input_error("modes with sin k = 0 are excluded");
  const double eps_qp = 2.0 * K * std::cos(k) + M;
  const double s = 2.0 * K * std::sin(k);
  return -(eps_qp * eps_qp) / (s * s * std::sin(theta1));
}

std::vector<ZeroSolution> allowed_modes(double K, double M, double theta1, int L) {
  validate({K, M, theta1});
  check_zero_seek_phase(theta1);
  if (L < 2) throw invalid_input_error("allowed_modes needs L >= 2");
  const double sin_t1 = std::sin(theta1);
  std::vector<ZeroSolution> out;
  for (int j = 0; j < L; ++j) {
    const double k = 2.0 * pi * j / L;
    if (excluded_mode(k)) continue;
    const double eps_qp = 2.0 * K * std::cos(k) + M;
    if (std::abs(eps_qp) <= zero_mode_rel_tol * (2.0 * K + M)) {
      // quench exactly onto a zero-energy mode on the grid
      out.push_back({j, k, 0.0, 0.0, inf});
      continue;
    }
    const double s = 2.0 * K * std::sin(k);
    const double rhs = -(eps_qp * eps_qp) / (s * s * sin_t1);
    if (!(std::abs(rhs) <= 1.0)) continue;
    const double theta2 = std::asin(rhs);
    const double gap = band_gap({K, M, theta2}, k);
    out.push_back({j, k, theta2, gap, pi / gap});
  }
  return out;
}

std::vector<double> critical_times(const ZeroSolution& sol, int n_max) {
  if (n_max < 0) throw invalid_input_error("critical_times needs n_max >= 0");
  if (!(sol.gap > 0.0))
    throw no_solution_error("quench exactly onto a zero mode has no finite critical time");
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) times.push_back(2.0 * pi * (n + 0.5) / sol.gap);
  return times;
}

double delta_c(double K, double M, double theta1, int L) {
  const std::vector<ZeroSolution> sols = allowed_modes(K, M, theta1, L);
  double best = inf;
  for (const ZeroSolution& sol : sols) best = std::min(best, std::abs(sol.theta2));
  return best;
}

double delta_c_asymptote(double K, double M, double theta1, int L) {
  const std::vector<ZeroSolution> sols = allowed_modes(K, M, theta1, L);
  const double k_c_minus = gap_closing_modes({K, M, theta1}).first;
  double best = inf;
  for (const ZeroSolution& sol : sols) {
    if (sol.gap == 0.0) return 0.0;
    const double d = sol.k - k_c_minus;
    best = std::min(best, d * d / std::sin(theta1));
  }
  return best;
}

}  // namespace creutz
