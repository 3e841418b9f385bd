#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "roa/numerics.hpp"

namespace roa {

/// <A, P> + sum_l aux_coeffs[l].second * aux[aux_coeffs[l].first] >= rhs
struct LinearConstraint {
  SymmetricMatrix a;
  std::vector<std::pair<int, double>> aux_coeffs;
  double rhs{0.0};

  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
};

/// minimize <C, P> + c_aux^T aux over P (q x q, PSD) and free scalars aux,
/// subject to a list of linear inequalities.
struct SdpProblem {
  int q{0};
  int n_aux{0};
  SymmetricMatrix objective_p;
  Eigen::VectorXd objective_aux;
  std::vector<LinearConstraint> constraints;

  SdpProblem() = default;
  SdpProblem(int q, int n_aux);

  /// Throws std::invalid_argument on a structurally empty problem,
  /// mismatched dimensions or non-finite data.
  void Validate() const;
  double Objective(const SymmetricMatrix& p, const Eigen::VectorXd& aux) const;
  /// <A_k, P> + b_k^T aux for constraint k.
  double ConstraintValue(int k, const SymmetricMatrix& p,
                         const Eigen::VectorXd& aux) const;

  friend bool operator==(const SdpProblem& a, const SdpProblem& b) {
    return a.q == b.q && a.n_aux == b.n_aux &&
           a.objective_p == b.objective_p &&
           a.objective_aux.size() == b.objective_aux.size() &&
           a.objective_aux == b.objective_aux &&
           a.constraints == b.constraints;
  }
};

enum class SdpStatus { kOptimal, kMaxIters, kInfeasible };
const char* SdpStatusName(SdpStatus status);
SdpStatus ParseSdpStatus(const std::string& name);

struct SdpSettings {
  int max_iters{50'000};
  double tol{1e-7};
  double psd_tol{1e-9};
  double rho{10.0};
  double sigma{1e-6};
  double relaxation{1.6};
  /// Residual-balancing rho updates. Off by default: on the regression
  /// problems it settles on a rho far below the one that converges fastest.
  bool adaptive_rho{false};
  /// Iterations between termination / best-iterate checks.
  int check_interval{10};
  /// Threshold for the primal infeasibility certificate.
  double infeasibility_tol{1e-6};
};

struct SdpSolution {
  SymmetricMatrix p;
  Eigen::VectorXd aux;
  SdpStatus status{SdpStatus::kMaxIters};
  /// ||A x - z||_inf of the (rescaled) splitting at the last check.
  double primal_residual{0.0};
  /// ||c + A^T y||_inf of the (rescaled) splitting at the last check.
  double dual_residual{0.0};
  /// Largest constraint violation of (p, aux), original units.
  double max_violation{0.0};
  double objective{0.0};
  int iterations{0};
};

struct ViolationReport {
  /// max(0, rhs_k - <A_k, P> - b_k^T aux) per constraint.
  std::vector<double> violations;
  int violated_count{0};
  double max_violation{0.0};
};

/// Violation of each constraint at (p, aux). A constraint counts as violated
/// when its violation exceeds `threshold`.
ViolationReport ComputeViolations(const SdpProblem& problem,
                                  const SymmetricMatrix& p,
                                  const Eigen::VectorXd& aux,
                                  double threshold = 0.0);

/// ADMM over the PSD cone and the constraint polyhedron. The PSD block is
/// rescaled by a diagonal congruence and constraint rows are normalized
/// before iterating; the result is mapped back to original units.
///
/// Always returns an iterate. When the run does not converge, that is the
/// best iterate seen, ordered by (max(max_violation, tol), objective). The
/// returned P is always PSD to within psd_tol.
SdpSolution SolveSdp(const SdpProblem& problem,
                     const SdpSettings& settings = {});

}  // namespace roa
