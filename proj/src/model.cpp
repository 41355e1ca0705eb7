#include "creutz/model.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace creutz {

namespace {
constexpr double pi = std::numbers::pi;
}

void validate(const ModelParams& p) {
  if (!(p.K > 0.0) || !(p.M > 0.0))
    throw invalid_input_error("model parameters require K > 0 and M > 0");
}

void require_gapless_regime(const ModelParams& p) {
  validate(p);
  if (!(p.M < 2.0 * p.K))
    throw no_solution_error("no gap-closing modes: M >= 2K");
}

MomentumGrid momentum_grid(int L) {
  if (L < 2) throw invalid_input_error("momentum grid needs L >= 2");
  MomentumGrid grid;
  grid.L = L;
  grid.points.resize(static_cast<std::size_t>(L));
  for (int j = 0; j < L; ++j) grid.points[static_cast<std::size_t>(j)] = 2.0 * pi * j / L;
  return grid;
}

BlockEntries block_entries(const ModelParams& p, double k) {
  return {2.0 * p.K * std::cos(k - p.theta), 2.0 * p.K * std::cos(k + p.theta),
          2.0 * p.K * std::cos(k) + p.M};
}

double bogoliubov_angle(const ModelParams& p, double k) {
  const BlockEntries e = block_entries(p, k);
  const double num = 2.0 * e.eps_qp;
  const double den = e.eps_q - e.eps_p;
  if (num == 0.0 && den == 0.0) return 0.0;  // doubly degenerate block
  return std::atan2(num, den);
}

BandEnergies band_energies(const ModelParams& p, double k) {
  const double eps_qp = 2.0 * p.K * std::cos(k) + p.M;
  const double cross = 2.0 * p.K * std::sin(k) * std::sin(p.theta);
  const double mean = -2.0 * p.K * std::cos(k) * std::cos(p.theta);
  const double half_gap = std::hypot(eps_qp, cross);
  BandEnergies bands;
  bands.eps_alpha = mean - half_gap;
  bands.eps_beta = mean + half_gap;
  bands.eps_alpha_tilde = bands.eps_alpha - p.M;
  bands.eps_beta_tilde = bands.eps_beta - p.M;
  return bands;
}

double band_gap(const ModelParams& p, double k) {
  const double eps_qp = 2.0 * p.K * std::cos(k) + p.M;
  const double cross = 2.0 * p.K * std::sin(k) * std::sin(p.theta);
  return 2.0 * std::hypot(eps_qp, cross);
}

std::pair<double, double> gap_closing_modes(const ModelParams& p) {
  require_gapless_regime(p);
  const double acos_term = std::acos(p.M / (2.0 * p.K));
  return {pi - acos_term, pi + acos_term};
}

ClosingPhaseFraction closing_phase_fraction(const ModelParams& p, long long max_denominator) {
  require_gapless_regime(p);
  const double x = std::acos(p.M / (2.0 * p.K)) / pi;  // in (0, 1/2]
  constexpr double tol = 1e-9;

  // continued-fraction convergents of x
  long long p0 = 1, q0 = 0;  // p_{-1}/q_{-1}
  long long p1 = 0, q1 = 1;  // p_0/q_0 seeded from a_0 = floor(x) = 0
  double frac = x;
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol && q1 >= 1)
      return {p1, q1};
    if (frac == 0.0) break;
    frac = 1.0 / frac;
    const double a = std::floor(frac);
    if (a > 4.0e18) break;
    frac -= a;
    const long long ai = static_cast<long long>(a);
    const long long p2 = ai * p1 + p0;
    const long long q2 = ai * q1 + q0;
    if (q2 > max_denominator) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  if (q1 >= 1 && std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol)
    return {p1, q1};
  throw incommensurate_error("arccos(M/2K)/pi not recognized as rational within bound");
}

std::vector<int> commensurate_sizes(long long s, long long r, int L_max) {
  if (s <= 0 || r <= 0 || s >= r) throw invalid_input_error("need 0 < s < r");
  const long long q_minus = 2 * r / std::gcd(r - s, 2 * r);
  const long long q_plus = 2 * r / std::gcd(r + s, 2 * r);
  const long long base = std::lcm(q_minus, q_plus);
  std::vector<int> sizes;
  for (long long L = base; L <= L_max; L += base) sizes.push_back(static_cast<int>(L));
  return sizes;
}

std::vector<int> commensurate_sizes(const ModelParams& p, int L_max) {
  const ClosingPhaseFraction f = closing_phase_fraction(p);
  return commensurate_sizes(f.s, f.r, L_max);
}

}  // namespace creutz
