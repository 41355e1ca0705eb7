#pragma once

#include <array>

#include "creutz/model.hpp"

namespace creutz {
namespace oracle {

// Brute-force verifier built from closed-form 2x2 algebra only. Kept
// independent of the Bogoliubov-angle branch used by the main code path.

// Real symmetric block [[h00, h01], [h01, h11]].
struct TwoByTwoBlock {
  double h00;
  double h01;
  double h11;
};

// H(k) = -[[eps_q, eps_qp], [eps_qp, eps_p]], entries per the model definition.
TwoByTwoBlock hamiltonian_block(double K, double M, double theta, double k);

struct EigenSystem {
  double val_lo;
  double val_hi;
  std::array<double, 2> vec_lo;
  std::array<double, 2> vec_hi;
};

// Closed-form symmetric 2x2 eigendecomposition, values ascending, vectors
// orthonormal.
EigenSystem numeric_eigensystem(const TwoByTwoBlock& block);

// |<psi| exp(-i H_f(k) t) |psi>|^2 with |psi> the lower eigenvector of
// H_i(k); evolution through the eigenbasis of H_f(k).
double numeric_mode_le(double K, double M, double theta1, double theta2, double k, double t);

// Same quantity plus the squared norm of the evolved vector (unitarity probe).
struct ModeEvolution {
  double le;
  double norm_sq;
};
ModeEvolution numeric_mode_evolution(double K, double M, double theta1, double theta2, double k,
                                     double t);

// sqrt(sum_k <H_f^2> - <H_f>^2) in the per-mode lower pre-quench eigenvectors,
// evaluated by direct matrix-vector products.
double numeric_energy_variance(double K, double M, double theta1, double theta2, int L);

}  // namespace oracle
}  // namespace creutz
