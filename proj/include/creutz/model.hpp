#pragma once

#include <utility>
#include <vector>

#include "creutz/errors.hpp"

namespace creutz {

// Static Creutz-ladder model: two-leg ladder of spinless fermions with
// horizontal/diagonal hopping K, vertical hopping M and Peierls phase theta.
// All energies are in units of the hopping amplitudes, hbar = 1.
struct ModelParams {
  double K = 1.0;      // horizontal/diagonal hopping, > 0
  double M = 1.0;      // vertical hopping, > 0
  double theta = 0.0;  // Peierls phase, radians in (-pi, pi]
};

// Throws invalid_input_error unless K > 0 and M > 0.
void validate(const ModelParams& p);

// Throws no_solution_error unless M < 2K (gap-closing modes exist).
void require_gapless_regime(const ModelParams& p);

// Discrete Brillouin zone k_j = 2*pi*j/L, j = 0..L-1.
struct MomentumGrid {
  int L = 0;
  std::vector<double> points;
};

// Entries of the 2x2 momentum block H(k) = -[[eps_q, eps_qp], [eps_qp, eps_p]].
struct BlockEntries {
  double eps_q;   // 2K cos(k - theta)
  double eps_p;   // 2K cos(k + theta)
  double eps_qp;  // 2K cos(k) + M
};

struct BandEnergies {
  double eps_alpha;        // lower band
  double eps_beta;         // upper band
  double eps_alpha_tilde;  // eps_alpha - M
  double eps_beta_tilde;   // eps_beta - M
};

MomentumGrid momentum_grid(int L);

BlockEntries block_entries(const ModelParams& p, double k);

// Rotation angle gamma_k in (-pi, pi] fixed by atan2(2 eps_qp, eps_q - eps_p);
// rotating H(k) by gamma/2 diagonalizes it with (eps_alpha, eps_beta) order.
// The doubly degenerate point (both arguments zero) returns 0 by convention.
double bogoliubov_angle(const ModelParams& p, double k);

BandEnergies band_energies(const ModelParams& p, double k);

// eps_beta - eps_alpha = 2*sqrt(eps_qp^2 + (2K sin k sin theta)^2) >= 0.
double band_gap(const ModelParams& p, double k);

// Gap-closing wave numbers (k_c_minus, k_c_plus) = pi -+ arccos(M/2K).
// Requires M < 2K.
std::pair<double, double> gap_closing_modes(const ModelParams& p);

// arccos(M/2K) = (s/r)*pi as a reduced fraction.
struct ClosingPhaseFraction {
  long long s = 0;
  long long r = 1;
};

// Rational reconstruction of arccos(M/2K)/pi by continued fractions with the
// given denominator bound; tolerance 1e-9. Throws incommensurate_error if no
// fraction is found within the bound.
ClosingPhaseFraction closing_phase_fraction(const ModelParams& p, long long max_denominator = 64);

// All L <= L_max placing both k_c_minus and k_c_plus exactly on the grid:
// multiples of lcm of the reduced denominators of (r-s)/2r and (r+s)/2r.
std::vector<int> commensurate_sizes(long long s, long long r, int L_max);
std::vector<int> commensurate_sizes(const ModelParams& p, int L_max);

// |eps_qp| below this times (2K + M) counts as an exact zero-energy mode.
inline constexpr double zero_mode_rel_tol = 1e-12;

}  // namespace creutz
