#include "twr/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace twr {

std::string scheme_name(Scheme scheme) { return scheme == Scheme::MI ? "mi" : "mp"; }

namespace {

// Shared SINR kernel: gains(k,j) = (downlink row of k) * (uplink column of j),
// noise_row2(k) = squared norm of the beamformed downlink row.
Eigen::VectorXd sinr_kernel(const Eigen::MatrixXcd& gains, const Eigen::VectorXd& noise_row2,
                            const Eigen::VectorXd& powers, double sigma2,
                            const PairingMap& pairing) {
  const int K = static_cast<int>(gains.rows());
  Eigen::VectorXd out(K);
  for (int k = 0; k < K; ++k) {
    const int partner = pairing(k);
    const double desired = std::norm(gains(k, partner)) * powers(partner);
    double interference = 0.0;
    for (int j = 0; j < K; ++j) {
      if (j == k || j == partner) continue;
      interference += std::norm(gains(k, j)) * powers(j);
    }
    out(k) = desired / (interference + (noise_row2(k) + 1.0) * sigma2);
  }
  return out;
}

}  // namespace

Eigen::VectorXd sinr(const Eigen::MatrixXcd& B, const ReducedChannels& red,
                     const Eigen::VectorXd& powers, double sigma2, const PairingMap& pairing) {
  const Eigen::MatrixXcd rows = red.Htilde.transpose() * B;  // row k = h_k^T B
  const Eigen::MatrixXcd gains = rows * red.Htilde;
  const Eigen::VectorXd noise_row2 = rows.rowwise().squaredNorm();
  return sinr_kernel(gains, noise_row2, powers, sigma2, pairing);
}

Eigen::VectorXd sinr_from_lift(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& H_UL,
                               const Eigen::VectorXd& powers, double sigma2,
                               const PairingMap& pairing) {
  const Eigen::MatrixXcd rows = H_UL.transpose() * A;
  const Eigen::MatrixXcd gains = rows * H_UL;
  const Eigen::VectorXd noise_row2 = rows.rowwise().squaredNorm();
  return sinr_kernel(gains, noise_row2, powers, sigma2, pairing);
}

double relay_power(const Eigen::MatrixXcd& B, const ReducedChannels& red,
                   const Eigen::VectorXd& powers, double sigma2) {
  const Eigen::MatrixXcd cols = B * red.Htilde;  // column k = B h_k
  return cols.colwise().squaredNorm().dot(powers.transpose()) + B.squaredNorm() * sigma2;
}

double relay_power_from_lift(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& H_UL,
                             const Eigen::VectorXd& powers, double sigma2) {
  const Eigen::MatrixXcd cols = A * H_UL;
  return cols.colwise().squaredNorm().dot(powers.transpose()) + A.squaredNorm() * sigma2;
}

Eigen::VectorXd rates(const Eigen::VectorXd& sinr_values, int subgroups) {
  if (subgroups < 1) throw std::invalid_argument("rates: subgroups must be >= 1");
  const double prelog = 0.5 / static_cast<double>(subgroups);
  return sinr_values.unaryExpr([prelog](double g) { return prelog * std::log2(1.0 + g); });
}

PerformanceReport make_report(const Eigen::VectorXd& sinr_values, double relay_power_value,
                              Scheme scheme, int subgroups) {
  PerformanceReport report;
  report.sinr = sinr_values;
  report.rates = rates(sinr_values, subgroups);
  report.relay_power = relay_power_value;
  report.sum_rate = report.rates.sum();
  report.scheme = scheme;
  report.subgroups = subgroups;
  return report;
}

}  // namespace twr
