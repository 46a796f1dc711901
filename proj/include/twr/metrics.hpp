#pragma once

#include <Eigen/Dense>
#include <string>

#include "twr/channel.hpp"
#include "twr/reduction.hpp"

namespace twr {

enum class Scheme { MI, MP };

std::string scheme_name(Scheme scheme);

// Reduced-space relay beamformer. B already includes the power scaling
// alpha; alpha is recorded for reporting.
struct RelayBeamformer {
  Eigen::MatrixXcd B;  // r x r
  double alpha = 1.0;
  Scheme scheme = Scheme::MI;
  bool regularized = false;  // ridge path taken while solving
};

// Per-destination SINR of the reduced-space beamformer B: desired-signal
// power from the partner over inter-pair interference plus amplified-and-
// forwarded noise plus receiver noise. Self and partner terms are excluded
// from the interference sum (self-interference cancellation).
Eigen::VectorXd sinr(const Eigen::MatrixXcd& B, const ReducedChannels& red,
                     const Eigen::VectorXd& powers, double sigma2, const PairingMap& pairing);

// Same metric evaluated with the full M x M beamformer on raw channels;
// reference route for the subspace-equivalence checks.
Eigen::VectorXd sinr_from_lift(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& H_UL,
                               const Eigen::VectorXd& powers, double sigma2,
                               const PairingMap& pairing);

// Total relay transmit power of B (reduced space).
double relay_power(const Eigen::MatrixXcd& B, const ReducedChannels& red,
                   const Eigen::VectorXd& powers, double sigma2);
double relay_power_from_lift(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& H_UL,
                             const Eigen::VectorXd& powers, double sigma2);

// r_k = 1/(2N) log2(1 + sinr_k): half for the two-slot exchange, 1/N for
// time division across N subgroups.
Eigen::VectorXd rates(const Eigen::VectorXd& sinr_values, int subgroups);

struct PerformanceReport {
  Eigen::VectorXd sinr;
  Eigen::VectorXd rates;
  double relay_power = 0.0;
  double sum_rate = 0.0;
  Scheme scheme = Scheme::MI;
  int subgroups = 1;
  bool regularized = false;
};

PerformanceReport make_report(const Eigen::VectorXd& sinr_values, double relay_power_value,
                              Scheme scheme, int subgroups);

}  // namespace twr
