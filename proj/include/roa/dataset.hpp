#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roa/numerics.hpp"
#include "roa/trajectory.hpp"

namespace roa {

/// One (x_i, y_i) sample of the regression, y = log10(1 + V(x_i)).
struct RegressionPoint {
  StateVector x;
  double y{0.0};
  /// r(x) for the weighted (general equilibrium set) pipeline; y has already
  /// been divided by it when present.
  std::optional<double> weight_r;
  /// "convergent" for an initial condition, "partition" for a point taken
  /// from the interior of a trajectory.
  std::string label{"convergent"};
};

/// Integrand of the trajectory sum. Defaults to ||x - shift||^2.
using Integrand = std::function<double(const StateVector&)>;

Integrand SquaredDistanceTo(const StateVector& shift);

/// Riemann sum sum_{j=0}^{K} ||a(j) - shift||^2 * sample_dt. Throws
/// std::invalid_argument on a divergent trajectory.
double LyapunovValue(const Trajectory& traj, const StateVector& shift);
double LyapunovValue(const Trajectory& traj, const Integrand& integrand);

/// y = log10(1 + V) for each (x, V). Throws on V < 0 or non-finite V.
std::vector<RegressionPoint> ToRegression(
    const std::vector<std::pair<StateVector, double>>& points);

/// For each cut index M in 1..K returns (a(M), sum_{j=M}^{K} ...). All tails
/// come from one suffix-sum pass, so V(x0) = prefix(M) + tail(M).
std::vector<std::pair<StateVector, double>> PartitionTrajectory(
    const Trajectory& traj, const std::vector<int>& cut_indices,
    const Integrand& integrand);
std::vector<std::pair<StateVector, double>> PartitionTrajectory(
    const Trajectory& traj, const std::vector<int>& cut_indices,
    const StateVector& shift);

/// Cut indices that split samples 0..K into `spans` equal time spans.
/// Duplicates and index 0 are dropped.
std::vector<int> EqualTimeCuts(int last_index, int spans);

/// Independent uniform samples in `box`, reproducible from `seed`.
std::vector<StateVector> SampleInitialConditions(const StateBox& box,
                                                 int count,
                                                 std::uint64_t seed);

enum class PartitionPolicy { kAuto, kOn, kOff };

struct DatasetOptions {
  PartitionPolicy partition{PartitionPolicy::kAuto};
  int partition_spans{3};
  /// kAuto partitions only when the convergent set is at most this large.
  int auto_partition_limit{500};
  /// Relative size of the last Riemann term that triggers a truncation
  /// warning.
  double truncation_warn_ratio{1e-3};
};

struct RegressionDataset {
  StateVector shift;
  std::vector<RegressionPoint> points;
  std::vector<StateVector> divergent_ics;

  int num_convergent_trajectories{0};
  int num_partition_points{0};
  int truncation_warnings{0};
  bool partitioned{false};
};

/// Single-attractor dataset: every convergent trajectory integrates
/// ||a - shift||^2, divergent trajectories contribute their initial
/// conditions. Trajectories are processed in id order.
RegressionDataset BuildDataset(const std::vector<Trajectory>& trajectories,
                               const StateVector& shift,
                               const DatasetOptions& options = {});

/// General form: `integrand_for` picks the integrand per convergent
/// trajectory. `shift` is only recorded in the result.
RegressionDataset BuildDataset(
    const std::vector<Trajectory>& trajectories,
    const std::function<Integrand(const Trajectory&)>& integrand_for,
    const StateVector& shift, const DatasetOptions& options = {});

/// FNV-1a digest over a canonical rendering of the dataset.
std::string DatasetDigest(const RegressionDataset& dataset);
std::string Fnv1aHex(const std::string& bytes);

}  // namespace roa
