#include "twr/reduction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "twr/errors.hpp"

namespace twr {

ReducedChannels reduce(const Eigen::MatrixXcd& H_UL) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(H_UL, Eigen::ComputeThinU | Eigen::ComputeThinV);
  ReducedChannels red;
  red.U = svd.matrixU();
  red.V = svd.matrixV();
  red.sigma = svd.singularValues();
  const int r = red.subspace_dim();
  if (red.sigma(0) <= 0.0 || red.sigma(r - 1) <= 1e-12 * red.sigma(0)) {
    throw degenerate_channel_error("reduce: channel matrix is rank deficient");
  }
  red.Htilde = red.U.adjoint() * H_UL;
  return red;
}

ReducedChannels reduce(const ChannelSet& channels) { return reduce(channels.H_UL); }

Eigen::MatrixXcd lift(const Eigen::MatrixXcd& B, const Eigen::MatrixXcd& U) {
  if (B.rows() != B.cols() || B.rows() != U.cols()) {
    throw std::invalid_argument("lift: dimension mismatch, B is " + std::to_string(B.rows()) + "x" +
                                std::to_string(B.cols()) + ", U has " + std::to_string(U.cols()) +
                                " columns");
  }
  return U.conjugate() * B * U.adjoint();
}

Eigen::VectorXcd vec(const Eigen::MatrixXcd& Q) {
  return Eigen::Map<const Eigen::VectorXcd>(Q.data(), Q.size());
}

Eigen::MatrixXcd unvec(const Eigen::VectorXcd& b) {
  const int r = static_cast<int>(std::llround(std::sqrt(static_cast<double>(b.size()))));
  if (static_cast<Eigen::Index>(r) * r != b.size()) {
    throw std::invalid_argument("unvec: length is not a perfect square");
  }
  return Eigen::Map<const Eigen::MatrixXcd>(b.data(), r, r);
}

namespace {

// c (x) a with column-stacking convention: (c (x) a)^T vec(B) = a^T B c.
Eigen::VectorXcd kron_vec(const Eigen::VectorXcd& c, const Eigen::VectorXcd& a) {
  const Eigen::Index r = a.size();
  Eigen::VectorXcd out(r * c.size());
  for (Eigen::Index j = 0; j < c.size(); ++j) out.segment(j * r, r) = c(j) * a;
  return out;
}

}  // namespace

CouplingSet build_couplings(const ReducedChannels& red, const Eigen::VectorXd& powers,
                            const PairingMap& pairing, double sigma2,
                            const Eigen::VectorXd& beta) {
  const int r = red.subspace_dim();
  const int K = red.num_sources();
  const int n = r * r;
  if (powers.size() != K || pairing.size() != K || beta.size() != K) {
    throw std::invalid_argument("build_couplings: inconsistent sizes");
  }

  CouplingSet cs;
  cs.f.resize(K);
  cs.d.resize(K);
  cs.G.resize(K);
  cs.Phi = Eigen::MatrixXcd::Zero(n, n);
  cs.C.resize(n, K);
  cs.g = beta;

  for (int k = 0; k < K; ++k) {
    const int partner = pairing(k);
    const Eigen::VectorXcd hk = red.Htilde.col(k);
    cs.f[k] = std::sqrt(powers(partner)) * kron_vec(red.Htilde.col(partner), hk);
    cs.C.col(k) = cs.f[k].conjugate();

    cs.d[k].clear();
    for (int j = 0; j < K; ++j) {
      if (j == k || j == partner) continue;
      cs.d[k].push_back(std::sqrt(powers(j)) * kron_vec(red.Htilde.col(j), hk));
      const Eigen::VectorXcd& dkj = cs.d[k].back();
      cs.Phi.noalias() += dkj.conjugate() * dkj.transpose();  // R_k contribution
    }

    // G_k = I_r (x) h_k^T; its Gram matrix N_k = I_r (x) conj(h_k) h_k^T.
    cs.G[k] = Eigen::MatrixXcd::Zero(r, n);
    for (int l = 0; l < r; ++l) cs.G[k].block(l, l * r, 1, r) = hk.transpose();
    const Eigen::MatrixXcd W = hk.conjugate() * hk.transpose();
    for (int l = 0; l < r; ++l) cs.Phi.block(l * r, l * r, r, r) += sigma2 * W;
  }
  return cs;
}

CouplingSet build_couplings(const ReducedChannels& red, const Eigen::VectorXd& powers,
                            const PairingMap& pairing, double sigma2) {
  return build_couplings(red, powers, pairing, sigma2,
                         Eigen::VectorXd::Ones(red.num_sources()));
}

}  // namespace twr
