#pragma once

#include <Eigen/Dense>
#include <vector>

#include "twr/reduction.hpp"

namespace twr {

// One per-destination SINR constraint in second-order cone form over the
// complex weight vector b (length n = r^2):
//   |f_scaled^T b| >= || [ d_j^T b ... ; noise * b ; noise_floor ] ||
// with f_scaled = f_k / sqrt(gamma*_k), noise = sigma * G_k and
// noise_floor = sigma. The right-hand side squared equals the SINR
// denominator, so the cone holds exactly when sinr_k >= gamma*_k.
struct SinrCone {
  Eigen::VectorXcd f_scaled;
  std::vector<Eigen::VectorXcd> d;
  Eigen::MatrixXcd noise;
  double noise_floor = 0.0;
};

struct SocpProblem {
  Eigen::MatrixXcd psi;         // n x n Hermitian PSD; objective = b^H psi b
  Eigen::MatrixXcd psi_factor;  // lower factor L with psi = L L^H
  std::vector<SinrCone> cones;  // one per source with gamma* > 0
  std::vector<int> cone_source;
  Eigen::VectorXd gamma_targets;    // per source, zeros mean unconstrained
  Eigen::VectorXcd init_direction;  // interior-direction hint (gain-preserving)
  int dim = 0;                      // n, complex
};

// Relay power of b through the stored factor.
double socp_objective(const SocpProblem& problem, const Eigen::VectorXcd& b);

Eigen::dcomplex cone_gain(const SinrCone& cone, const Eigen::VectorXcd& b);
double cone_rhs(const SinrCone& cone, const Eigen::VectorXcd& b);

// Cone-solver contract: given the cone blocks with the gain row of cone k
// rotated by exp(-i*phase_k), find b minimizing b^H psi b over the rotated
// cones Re(e^{-i phase_k} f_scaled^T b) >= rhs_k(b) with relative duality
// gap <= tol, or report infeasibility.
class ConeSolver {
 public:
  enum class Status { Optimal, Infeasible, Failure };
  struct Outcome {
    Status status = Status::Failure;
    Eigen::VectorXcd b;
    double objective = 0.0;
    int newton_steps = 0;
  };

  virtual ~ConeSolver() = default;
  virtual Outcome solve(const SocpProblem& problem, const Eigen::VectorXd& phases,
                        const Eigen::VectorXcd& start, double tol) = 0;
};

// Reference implementation: log-barrier interior-point method on the real
// embedding of the problem, with a phase-I stage to find a strictly
// feasible point when the caller cannot provide one.
class BarrierSolver : public ConeSolver {
 public:
  struct Options {
    double mu = 20.0;           // barrier parameter growth
    int max_outer = 64;
    int max_newton = 80;
    double armijo = 0.25;
  };

  BarrierSolver() = default;
  explicit BarrierSolver(const Options& options) : options_(options) {}

  Outcome solve(const SocpProblem& problem, const Eigen::VectorXd& phases,
                const Eigen::VectorXcd& start, double tol) override;

 private:
  Options options_;
};

}  // namespace twr
