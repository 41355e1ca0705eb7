#include "creutz/oracle.hpp"

#include <cmath>
#include <complex>

namespace creutz {
namespace oracle {

TwoByTwoBlock hamiltonian_block(double K, double M, double theta, double k) {
  return {-2.0 * K * std::cos(k - theta), -(2.0 * K * std::cos(k) + M),
          -2.0 * K * std::cos(k + theta)};
}

EigenSystem numeric_eigensystem(const TwoByTwoBlock& block) {
  const double a = block.h00;
  const double b = block.h11;
  const double c = block.h01;
  const double mean = 0.5 * (a + b);
  const double radius = std::hypot(0.5 * (a - b), c);
  EigenSystem sys;
  sys.val_lo = mean - radius;
  sys.val_hi = mean + radius;
  // rotation angle phi with columns (cos, sin) / (-sin, cos) for hi / lo
  const double phi = (c == 0.0 && a == b) ? 0.0 : 0.5 * std::atan2(2.0 * c, a - b);
  const double cs = std::cos(phi);
  const double sn = std::sin(phi);
  sys.vec_hi = {cs, sn};
  sys.vec_lo = {-sn, cs};
  return sys;
}

ModeEvolution numeric_mode_evolution(double K, double M, double theta1, double theta2, double k,
                                     double t) {
  const EigenSystem initial = numeric_eigensystem(hamiltonian_block(K, M, theta1, k));
  const EigenSystem final_sys = numeric_eigensystem(hamiltonian_block(K, M, theta2, k));
  // expand the initial lower eigenvector in the final eigenbasis
  const double c_lo =
      final_sys.vec_lo[0] * initial.vec_lo[0] + final_sys.vec_lo[1] * initial.vec_lo[1];
  const double c_hi =
      final_sys.vec_hi[0] * initial.vec_lo[0] + final_sys.vec_hi[1] * initial.vec_lo[1];
  const std::complex<double> phase_lo = std::polar(1.0, -final_sys.val_lo * t);
  const std::complex<double> phase_hi = std::polar(1.0, -final_sys.val_hi * t);
  const std::complex<double> amp = c_lo * c_lo * phase_lo + c_hi * c_hi * phase_hi;
  // evolved vector back in the original basis, for the unitarity probe
  std::complex<double> v0 = c_lo * phase_lo * final_sys.vec_lo[0] +
                            c_hi * phase_hi * final_sys.vec_hi[0];
  std::complex<double> v1 = c_lo * phase_lo * final_sys.vec_lo[1] +
                            c_hi * phase_hi * final_sys.vec_hi[1];
  return {std::norm(amp), std::norm(v0) + std::norm(v1)};
}

double numeric_mode_le(double K, double M, double theta1, double theta2, double k, double t) {
  return numeric_mode_evolution(K, M, theta1, theta2, k, t).le;
}

double numeric_energy_variance(double K, double M, double theta1, double theta2, int L) {
  if (L < 1) throw invalid_input_error("numeric_energy_variance needs L >= 1");
  constexpr double two_pi = 6.283185307179586476925286766559;
  double total = 0.0;
  for (int j = 0; j < L; ++j) {
    const double k = two_pi * j / L;
    const EigenSystem initial = numeric_eigensystem(hamiltonian_block(K, M, theta1, k));
    const TwoByTwoBlock hf = hamiltonian_block(K, M, theta2, k);
    const double v0 = initial.vec_lo[0];
    const double v1 = initial.vec_lo[1];
    const double w0 = hf.h00 * v0 + hf.h01 * v1;
    const double w1 = hf.h01 * v0 + hf.h11 * v1;
    const double first_moment = v0 * w0 + v1 * w1;  // <H>
    // <H^2> - <H>^2 = |(H - <H>) v|^2, free of the moment cancellation
    const double r0 = w0 - first_moment * v0;
    const double r1 = w1 - first_moment * v1;
    total += r0 * r0 + r1 * r1;
  }
  return std::sqrt(total);
}

}  // namespace oracle
}  // namespace creutz
