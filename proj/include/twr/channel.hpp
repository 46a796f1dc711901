#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace twr {

using cplx = std::complex<double>;
using Rng = std::mt19937_64;

double db_to_linear(double x_db);

// Partner relation between sources: an involution without fixed points.
struct PairingMap {
  std::vector<int> partner;

  int size() const { return static_cast<int>(partner.size()); }
  int operator()(int k) const { return partner[static_cast<std::size_t>(k)]; }
};

// Adjacency pairing (0,1), (2,3), ...
PairingMap make_pairing(int num_sources);

// Throws std::invalid_argument unless partner is an involution without
// fixed points.
void check_pairing(const PairingMap& pairing);

struct ChannelSet {
  Eigen::MatrixXcd H_UL;          // M x K, column k = uplink channel of source k
  PairingMap pairing;
  Eigen::VectorXd source_powers;  // linear scale

  int num_sources() const { return static_cast<int>(H_UL.cols()); }
  int num_antennas() const { return static_cast<int>(H_UL.rows()); }
};

// One CN(0,1) draw. Box-Muller on raw mt19937_64 words so the sequence does
// not depend on the standard library's distribution implementation.
cplx complex_gaussian(Rng& rng);

// K channels of M antennas each, entries marginally CN(0,1). For rho > 0 the
// per-component cross-correlation between different sources is sqrt(rho),
// built from a common CN(0,1) vector shared by all sources. Unit source
// powers; callers overwrite source_powers as needed.
ChannelSet draw_channels(int num_sources, int num_antennas, double rho, Rng& rng);
ChannelSet draw_channels(int num_sources, int num_antennas, double rho, Rng& rng,
                         const Eigen::VectorXd& source_powers);

}  // namespace twr
