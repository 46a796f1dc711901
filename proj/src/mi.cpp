#include "twr/mi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "twr/errors.hpp"

namespace twr {

MiSolution solve_mi(const CouplingSet& couplings) {
  const Eigen::Index n = couplings.Phi.rows();
  const Eigen::Index K = couplings.C.cols();

  MiSolution sol;
  Eigen::MatrixXcd phi = couplings.Phi;
  Eigen::LLT<Eigen::MatrixXcd> llt(phi);
  if (llt.info() != Eigen::Success) {
    // Possible only for near-zero Phi (e.g. sigma^2 = 0 with a single pair).
    const double trace = phi.trace().real();
    double ridge = 1e-12 * std::max(trace / static_cast<double>(n), 1e-30);
    if (trace <= 0.0) ridge = 1e-12;
    for (int attempt = 0; attempt < 4 && llt.info() != Eigen::Success; ++attempt) {
      phi = couplings.Phi + ridge * Eigen::MatrixXcd::Identity(n, n);
      llt.compute(phi);
      ridge *= 1e3;
    }
    if (llt.info() != Eigen::Success) {
      throw degenerate_channel_error("solve_mi: Phi is not positive definite");
    }
    sol.regularized = true;
  }

  const Eigen::MatrixXcd X = llt.solve(couplings.C);          // Phi^{-1} C
  const Eigen::MatrixXcd S = couplings.C.adjoint() * X;       // C^H Phi^{-1} C, K x K Hermitian
  Eigen::LDLT<Eigen::MatrixXcd> ldlt(S);
  if (ldlt.info() != Eigen::Success) {
    throw degenerate_channel_error("solve_mi: C^H Phi^{-1} C is singular");
  }
  const Eigen::VectorXcd y = ldlt.solve(couplings.g.cast<cplx>());
  sol.b = X * y;

  const double residual = (couplings.C.adjoint() * sol.b - couplings.g.cast<cplx>()).norm();
  const double limit = 1e-6 * std::max(couplings.g.norm(), 1e-30);
  if (!std::isfinite(residual) || residual > limit) {
    throw degenerate_channel_error("solve_mi: constraint residual " + std::to_string(residual) +
                                   " exceeds tolerance");
  }
  (void)K;
  return sol;
}

double scale_bisection(const Eigen::MatrixXcd& B, const ReducedChannels& red,
                       const Eigen::VectorXd& powers, double sigma2, double relay_power_target,
                       double delta_alpha, double alpha_max) {
  if (!(relay_power_target > 0.0)) {
    throw std::invalid_argument("scale_bisection: relay power target must be > 0");
  }
  if (!(delta_alpha > 0.0)) {
    throw std::invalid_argument("scale_bisection: delta_alpha must be > 0");
  }
  const double base_power = relay_power(B, red, powers, sigma2);
  if (!(base_power > 0.0)) {
    throw std::invalid_argument("scale_bisection: beamformer has zero power");
  }
  const double alpha_cf = std::sqrt(relay_power_target / base_power);
  if (relay_power(alpha_max * B, red, powers, sigma2) < relay_power_target) {
    throw std::invalid_argument("scale_bisection: alpha_max too small, need at least " +
                                std::to_string(2.0 * alpha_cf));
  }

  double lower = 0.0;
  double upper = alpha_max;
  while (upper - lower > delta_alpha) {
    const double mid = 0.5 * (lower + upper);
    if (relay_power(mid * B, red, powers, sigma2) < relay_power_target) {
      lower = mid;
    } else {
      upper = mid;
    }
  }
  if (std::abs(lower - alpha_cf) > delta_alpha) {
    throw solver_error("scale_bisection: bisection and closed-form alpha disagree: " +
                       std::to_string(lower) + " vs " + std::to_string(alpha_cf));
  }
  return lower;
}

RelayBeamformer mi_beamformer(const ReducedChannels& red, const PairingMap& pairing,
                              const Eigen::VectorXd& powers, double sigma2,
                              double relay_power_target, const Eigen::VectorXd& beta) {
  const CouplingSet couplings = build_couplings(red, powers, pairing, sigma2, beta);
  const MiSolution sol = solve_mi(couplings);
  const Eigen::MatrixXcd B0 = unvec(sol.b);

  const double base_power = relay_power(B0, red, powers, sigma2);
  if (!(base_power > 0.0)) {
    throw degenerate_channel_error("mi_beamformer: solution has zero relay power");
  }
  const double alpha_cf = std::sqrt(relay_power_target / base_power);
  // Tight bracket so the achieved power lands within 1e-6 relative of budget.
  const double delta = std::min(1e-6, 1e-7 * alpha_cf);
  const double alpha = scale_bisection(B0, red, powers, sigma2, relay_power_target, delta,
                                       2.0 * alpha_cf);

  RelayBeamformer bf;
  bf.B = alpha * B0;
  bf.alpha = alpha;
  bf.scheme = Scheme::MI;
  bf.regularized = sol.regularized;
  return bf;
}

}  // namespace twr
