#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "roa/dataset.hpp"
#include "roa/dynamics.hpp"
#include "roa/equilibrium_sets.hpp"
#include "roa/estimation.hpp"
#include "roa/sdp.hpp"

namespace roa {

/// No usable regression data, e.g. a batch without convergent trajectories.
class EmptyDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Index of the attractor nearest x if it is within `radius`.
std::optional<int> NearestAttractor(const StateVector& x,
                                    const std::vector<StateVector>& attractors,
                                    double radius);

/// Integrates every initial condition (ids 0..n-1) and tags convergent
/// trajectories with the declared equilibrium their last sample settled on.
std::vector<Trajectory> SimulateBatch(const OdeSystem& system,
                                      const std::vector<StateVector>& ics,
                                      const IntegratorConfig& config,
                                      const StateBox& limits,
                                      double capture_radius);

/// Ground truth for validation: x converges when its trajectory stays in
/// `limits` and, if `attractors` is non-empty, ends within capture_radius of
/// one of them.
std::function<bool(const StateVector&)> ConvergenceOracle(
    const OdeSystem& system, const IntegratorConfig& config,
    const StateBox& limits, std::vector<StateVector> attractors,
    double capture_radius);

/// Drops the divergent initial conditions whose separation constraints are
/// violated most and re-solves, until the solve is optimal or max_rounds is
/// reached.
struct SoftDivergentOptions {
  bool enabled{false};
  /// Share of the remaining divergent set dropped per round (at least one).
  double drop_fraction{0.02};
  int max_rounds{20};
};

struct PipelineOptions {
  int degree{2};
  /// Separation margin between divergent and convergent quadratic forms.
  double margin{1e-6};
  bool use_divergent{true};
  /// Normalize each coordinate by its largest offset from the shift
  /// (monomial bases only).
  bool normalize{true};
  double capture_radius{1e-2};
  DatasetOptions dataset;
  SdpSettings solver;
  SoftDivergentOptions soft;
};

struct PipelineResult {
  LyapunovEstimate estimate;
  RegressionDataset dataset;
  SdpSolution solution;
  int num_constraints{0};
  int num_aux{0};
  /// Divergent initial conditions that constrained the final solve.
  std::vector<StateVector> divergent_used;
  /// Divergent initial conditions dropped by the soft mode.
  int excluded_divergent{0};
  /// Convergent trajectories that did not settle on the target set.
  int excluded_trajectories{0};
  /// Regression points discarded because they lie on the equilibrium set.
  int excluded_points{0};
};

/// Monomial basis of degree `degree` centred on `attractor`. Throws
/// EmptyDataError when no trajectory is convergent.
PipelineResult EstimateSingleAttractor(const std::vector<Trajectory>& batch,
                                       const StateVector& attractor,
                                       const PipelineOptions& options);

/// Equilibrium-set basis over A1. Each convergent trajectory integrates the
/// squared distance to the A1 point nearest its last sample; trajectories
/// ending farther than capture_radius from every A1 point are excluded.
PipelineResult EstimateMultiEquilibrium(const std::vector<Trajectory>& batch,
                                        const std::vector<StateVector>& a1,
                                        const PipelineOptions& options);

/// Weighted fit with r(x) = squared distance to `set`. The basis is built
/// over the finite subset `basis_points` of the set. Convergent trajectories
/// ending farther than capture_radius from the set are excluded, as are
/// regression points with r <= snap_tol^2.
PipelineResult EstimateGeneralSet(const std::vector<Trajectory>& batch,
                                  const EquilibriumSet& set,
                                  const std::vector<StateVector>& basis_points,
                                  const PipelineOptions& options);

}  // namespace roa
