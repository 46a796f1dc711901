#pragma once

#include <Eigen/Dense>
#include <vector>

#include "twr/channel.hpp"

namespace twr {

// Thin SVD of the uplink channel matrix plus the effective channels
// h_tilde_k = U^H h_k living in the r-dimensional signal subspace,
// r = min(M, K).
struct ReducedChannels {
  Eigen::MatrixXcd U;       // M x r, orthonormal columns
  Eigen::VectorXd sigma;    // r singular values, nonincreasing
  Eigen::MatrixXcd V;       // K x r, orthonormal columns
  Eigen::MatrixXcd Htilde;  // r x K, column k = U^H h_k

  int subspace_dim() const { return static_cast<int>(U.cols()); }
  int num_sources() const { return static_cast<int>(Htilde.cols()); }
};

// Throws degenerate_channel_error when the smallest retained singular value
// is below 1e-12 relative to the largest.
ReducedChannels reduce(const Eigen::MatrixXcd& H_UL);
ReducedChannels reduce(const ChannelSet& channels);

// A = conj(U) * B * U^H, the full-array beamformer equivalent to the
// reduced-space B.
Eigen::MatrixXcd lift(const Eigen::MatrixXcd& B, const Eigen::MatrixXcd& U);

// Column stacking and its inverse (square matrices).
Eigen::VectorXcd vec(const Eigen::MatrixXcd& Q);
Eigen::MatrixXcd unvec(const Eigen::VectorXcd& b);

// Linear/quadratic couplings of vec(B) used by both beamformers, all in the
// reduced space with n = r^2:
//   f_k^T vec(B)     = sqrt(p_partner(k)) * h_k^T B h_partner(k)   (desired gain)
//   d_{k,j}^T vec(B) = sqrt(p_j) * h_k^T B h_j                     (interference)
//   ||G_k vec(B)||   = ||h_k^T B||                                 (AF noise)
// with h here standing for the effective channels. Phi, C, g assemble the
// quadratic form and gain constraints of the minimum-interference problem.
struct CouplingSet {
  std::vector<Eigen::VectorXcd> f;               // K vectors of length n
  std::vector<std::vector<Eigen::VectorXcd>> d;  // per k: K-2 vectors of length n
  std::vector<Eigen::MatrixXcd> G;               // K matrices, r x n
  Eigen::MatrixXcd Phi;                          // n x n Hermitian
  Eigen::MatrixXcd C;                            // n x K, column k = conj(f_k)
  Eigen::VectorXd g;                             // K response gains
};

CouplingSet build_couplings(const ReducedChannels& red, const Eigen::VectorXd& powers,
                            const PairingMap& pairing, double sigma2);
CouplingSet build_couplings(const ReducedChannels& red, const Eigen::VectorXd& powers,
                            const PairingMap& pairing, double sigma2,
                            const Eigen::VectorXd& beta);

}  // namespace twr
