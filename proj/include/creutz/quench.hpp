#pragma once

#include <span>
#include <vector>

#include "creutz/model.hpp"

namespace creutz {

// One sudden quench theta1 -> theta2 at fixed K, M on a chain of length L.
struct QuenchSpec {
  double K = 1.0;
  double M = 1.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  int L = 2;

  ModelParams pre() const { return {K, M, theta1}; }
  ModelParams post() const { return {K, M, theta2}; }
};

// Per-mode quench data: A = sin^2(2 eta_k), 2 eta_k = gamma_k(t1) - gamma_k(t2),
// gap evaluated at theta2.
struct ModeAmplitude {
  double k;
  double A;
  double gap;
  double two_eta;
};

// A grid mode whose post-quench phase produces an exact Loschmidt-echo zero.
// gap == 0 flags a quench exactly onto a zero-energy mode (t_first infinite).
struct ZeroSolution {
  int j;
  double k;
  double theta2;
  double gap;
  double t_first;  // pi/gap
};

// Sampled Loschmidt echo in log domain. rate = -log_le/L; samples where the
// echo vanishes exactly carry log_le = -inf and divergent = true.
struct LETrace {
  std::vector<double> times;
  std::vector<double> log_le;
  std::vector<double> rate;
  std::vector<bool> divergent;
};

struct EchoValue {
  double log_le;  // <= 0, -inf allowed
  double le;      // exp(log_le), flushed to 0 at -inf
};

ModeAmplitude mode_amplitude(const QuenchSpec& spec, double k);

// Full-grid product L(t) = prod_j [1 - A_kj sin^2(gap_kj t/2)], accumulated as
// a log sum in ascending j. Requires t >= 0; accepts L >= 1.
EchoValue loschmidt_echo(const QuenchSpec& spec, double t);

// Requires a nonempty, nonnegative, ascending time grid.
LETrace rate_function(const QuenchSpec& spec, std::span<const double> times);

// Right-hand side of the exact-zero constraint solved for sin(theta2):
// -(2K cos k + M)^2 / ((2K sin k)^2 sin theta1). k in {0, pi} is excluded.
double zero_condition_rhs(double K, double M, double theta1, double k);

// All grid modes admitting an exact-zero quench for theta1 in [0, pi/2]:
// theta2 = arcsin(rhs) in [-pi/2, 0] where |rhs| <= 1, gap from the post-quench
// band structure, ordered by j. Exact zero-energy modes are reported with
// theta2 = 0, gap = 0. Empty result is not an error.
std::vector<ZeroSolution> allowed_modes(double K, double M, double theta1, int L);

// t_n = 2*pi*(n + 1/2)/gap for n = 0..n_max. Throws no_solution_error when
// gap == 0 (quench exactly onto a zero-energy mode).
std::vector<double> critical_times(const ZeroSolution& sol, int n_max);

// Shortest |theta2| over the solution set; exactly 0 when the zero mode lies
// on the grid, +inf when the solution set is empty.
double delta_c(double K, double M, double theta1, int L);

// Large-L approximation min over solutions of (k - k_c_minus)^2 / sin(theta1)
// on the actual grid; 0 when the zero mode lies on the grid.
double delta_c_asymptote(double K, double M, double theta1, int L);

}  // namespace creutz
