#include "twr/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twr {

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

PairingMap make_pairing(int num_sources) {
  if (num_sources < 2 || num_sources % 2 != 0) {
    throw std::invalid_argument("make_pairing: number of sources must be even and >= 2, got " +
                                std::to_string(num_sources));
  }
  PairingMap pairing;
  pairing.partner.resize(static_cast<std::size_t>(num_sources));
  for (int k = 0; k < num_sources; k += 2) {
    pairing.partner[static_cast<std::size_t>(k)] = k + 1;
    pairing.partner[static_cast<std::size_t>(k + 1)] = k;
  }
  return pairing;
}

void check_pairing(const PairingMap& pairing) {
  const int n = pairing.size();
  for (int k = 0; k < n; ++k) {
    const int p = pairing(k);
    if (p < 0 || p >= n) throw std::invalid_argument("pairing: partner index out of range");
    if (p == k) throw std::invalid_argument("pairing: fixed point at source " + std::to_string(k));
    if (pairing(p) != k) throw std::invalid_argument("pairing: not an involution");
  }
}

cplx complex_gaussian(Rng& rng) {
  // 53-bit mantissa uniforms; u1 in (0,1], u2 in [0,1).
  constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * kInv53;
  const double u2 = static_cast<double>(rng() >> 11) * kInv53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  // Real and imaginary parts i.i.d. N(0, 1/2).
  constexpr double kInvSqrt2 = 0.7071067811865475244;
  return cplx(radius * std::cos(angle) * kInvSqrt2, radius * std::sin(angle) * kInvSqrt2);
}

ChannelSet draw_channels(int num_sources, int num_antennas, double rho, Rng& rng,
                         const Eigen::VectorXd& source_powers) {
  if (num_sources < 2 || num_sources % 2 != 0) {
    throw std::invalid_argument("draw_channels: number of sources must be even and >= 2");
  }
  if (num_antennas < num_sources - 1) {
    throw std::invalid_argument("draw_channels: need M >= K-1, got M=" + std::to_string(num_antennas) +
                                " K=" + std::to_string(num_sources));
  }
  if (!(rho >= 0.0 && rho < 1.0)) {
    throw std::invalid_argument("draw_channels: rho must lie in [0,1)");
  }
  if (source_powers.size() != num_sources) {
    throw std::invalid_argument("draw_channels: source_powers size mismatch");
  }

  ChannelSet out;
  out.H_UL.resize(num_antennas, num_sources);
  out.pairing = make_pairing(num_sources);
  out.source_powers = source_powers;

  if (rho == 0.0) {
    for (int k = 0; k < num_sources; ++k)
      for (int m = 0; m < num_antennas; ++m) out.H_UL(m, k) = complex_gaussian(rng);
    return out;
  }

  // Common component with per-component correlation r = sqrt(rho); the mix
  // keeps the marginal variance at one.
  const double r = std::sqrt(rho);
  const double w_common = std::sqrt(r);
  const double w_own = std::sqrt(1.0 - r);
  Eigen::VectorXcd common(num_antennas);
  for (int m = 0; m < num_antennas; ++m) common(m) = complex_gaussian(rng);
  for (int k = 0; k < num_sources; ++k)
    for (int m = 0; m < num_antennas; ++m)
      out.H_UL(m, k) = w_own * complex_gaussian(rng) + w_common * common(m);
  return out;
}

ChannelSet draw_channels(int num_sources, int num_antennas, double rho, Rng& rng) {
  return draw_channels(num_sources, num_antennas, rho, rng,
                       Eigen::VectorXd::Ones(num_sources));
}

}  // namespace twr
