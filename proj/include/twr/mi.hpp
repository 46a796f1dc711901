#pragma once

#include <Eigen/Dense>

#include "twr/metrics.hpp"
#include "twr/reduction.hpp"

namespace twr {

struct MiSolution {
  Eigen::VectorXcd b;        // length n = r^2, unscaled
  bool regularized = false;  // ridge added to a non-positive-definite Phi
};

// Minimizer of b^H Phi b subject to C^H b = g:
//   b = Phi^{-1} C (C^H Phi^{-1} C)^{-1} g,
// computed through Hermitian factorizations rather than explicit inverses.
// Throws degenerate_channel_error when the factorizations fail or the
// constraint residual exceeds 1e-6 * ||g||.
MiSolution solve_mi(const CouplingSet& couplings);

// Bisection on alpha until the bracket is tighter than delta_alpha, keeping
// relay_power(alpha * B) <= target. The closed-form value
// sqrt(target / relay_power(B)) is tracked as an internal oracle; a
// disagreement beyond delta_alpha raises solver_error.
double scale_bisection(const Eigen::MatrixXcd& B, const ReducedChannels& red,
                       const Eigen::VectorXd& powers, double sigma2, double relay_power_target,
                       double delta_alpha, double alpha_max);

// End-to-end minimum-interference beamformer: unit-free solve, then scaling
// to the relay power budget (within 1e-6 relative).
RelayBeamformer mi_beamformer(const ReducedChannels& red, const PairingMap& pairing,
                              const Eigen::VectorXd& powers, double sigma2,
                              double relay_power_target, const Eigen::VectorXd& beta);

}  // namespace twr
