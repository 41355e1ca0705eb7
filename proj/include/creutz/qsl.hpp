#pragma once

#include <span>
#include <utility>
#include <vector>

#include "creutz/quench.hpp"

namespace creutz {

enum class ExtremumCase { max, min };

enum class Normalization { paper, sample_count };

// Extrema of the first divergence time over the finite-gap solution set.
// zero_mode_present reports quenches exactly onto a zero-energy mode, whose
// first divergence time is infinite and which are excluded from the extrema.
struct TauFExtrema {
  double tau_fmax;
  ZeroSolution sol_max;
  double tau_fmin;
  ZeroSolution sol_min;
  bool zero_mode_present;
};

struct SweepStats {
  double theta1;
  double mean;
  double variance;
  int sample_count;
  Normalization normalization;
};

// pi/gap; +inf sentinel when gap == 0.
double first_divergence_time(const ZeroSolution& sol);

// Scans all finite-gap solutions; throws no_solution_error when none exist.
TauFExtrema tau_f_extrema(double K, double M, double theta1, int L);

// Large-L form of tau_fmax: pi / (2 |2K sin(k_c_minus)| d) with d the distance
// from k_c_minus to the nearest grid point; +inf when the zero mode lies on
// the grid. Independent of theta1.
double tau_fmax_asymptote(double K, double M, int L);

// Limit of tau_fmin: pi / (2 |2K sin k_c1| sqrt(1 + sin theta1)) where cos k_c1
// is the root of (2K c + M)^2 = 4K^2 (1 - c^2) sin(theta1) maximizing |sin k|.
double tau_c_asymptote(double K, double M, double theta1);

// Post-quench energy spread: sqrt(sum_k A_k gap_k^2 / 4) over the full grid.
double energy_variance(const QuenchSpec& spec);

// arccos(sqrt(le)) / delta_e. Requires delta_e > 0.
double qsl_time(double le_value, double delta_e);

// Mandelstam-Tamm bound pi / (2 delta_e). Requires delta_e > 0.
double mt_bound(double delta_e);

// For each L: pick the extremal solution per `which`, quench theta1 ->
// theta2(sol) and report the Mandelstam-Tamm bound of that quench.
std::vector<std::pair<int, double>> qsl_vs_size(double K, double M, double theta1,
                                                ExtremumCase which, std::span<const int> L_list);

// Mean/variance of tau_qsl over L in {L_min, L_min+step, ..., <= L_max}.
// "paper" normalization divides both sums by (L_max - L_min), "sample_count"
// by the number of sampled sizes.
SweepStats qsl_sweep_stats(double K, double M, double theta1, ExtremumCase which, int L_min,
                           int L_max, int step, Normalization norm);

// Shared by qsl_sweep_stats and tests that inject synthetic values.
SweepStats sweep_stats_from_values(double theta1, std::span<const double> values, int L_min,
                                   int L_max, Normalization norm);

}  // namespace creutz
