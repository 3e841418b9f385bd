#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "roa/dynamics.hpp"
#include "roa/equilibrium_sets.hpp"
#include "roa/estimation.hpp"
#include "roa/pipeline.hpp"

namespace roa {

const char* ToolVersion();

/// Invalid or inconsistent configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The solver could not run on a well-formed problem (exit 4).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PipelineKind { kBasic, kDivergent, kMultiEquilibrium, kGeneralSet };
const char* PipelineKindName(PipelineKind kind);

struct SystemConfig {
  std::string type;
  double damping{0.5};
  int dim{1};
  GtmParameters gtm;
  /// "surrogate" or a path to a coefficient file.
  std::string aero{"surrogate"};
};

struct LimitCycleConfig {
  StateVector x0;
  double dt{1e-3};
  double transient_time{50.0};
  double max_period{50.0};
};

struct NamedBox {
  std::string name;
  StateBox box;
};

struct SliceConfig {
  std::string name;
  std::map<int, double> fixed;
  GridAxis x;
  GridAxis y;
};

/// One experiment. All state quantities are stored in internal units
/// (radians); `unit_factors` converts from the units used in the file.
struct ExperimentConfig {
  std::string name;
  nlohmann::json raw;
  std::string digest;
  std::string base_dir;

  SystemConfig system;
  std::vector<std::string> state_units;
  std::vector<double> unit_factors;

  StateBox ic_box;
  int ic_count{0};
  std::uint64_t seed{1};
  IntegratorConfig integrator;
  StateBox limits;

  PipelineKind pipeline{PipelineKind::kDivergent};
  PipelineOptions options;
  std::optional<StateVector> attractor;
  std::vector<StateVector> attractors;
  std::optional<EquilibriumSet> equilibrium_set;
  std::optional<LimitCycleConfig> limit_cycle;
  std::vector<StateVector> basis_points;

  int validation_count{0};
  std::uint64_t validation_seed{2};
  std::vector<NamedBox> validation_boxes;
  /// "label": convergent means the trajectory stays within the limits.
  /// "attractor": it must also end within capture_radius of the target set.
  std::string validation_truth{"label"};

  std::vector<SliceConfig> slices;
  double histogram_bin{5e-5};
  std::string output_dir{"out"};

  StateVector ToInternal(const StateVector& x) const;
  StateVector ToDisplay(const StateVector& x) const;
};

/// Command-line overrides applied to the raw configuration before parsing.
struct ConfigOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> margin;
  std::optional<std::string> output_dir;
};

/// Throws ConfigError on any schema or consistency problem. Relative paths
/// resolve against `base_dir`.
ExperimentConfig ParseConfig(nlohmann::json j, const std::string& base_dir,
                             const ConfigOverrides& overrides = {});
ExperimentConfig LoadConfig(const std::string& path,
                            const ConfigOverrides& overrides = {});

OdeSystem BuildSystem(const ExperimentConfig& config);

/// Resolves the target set (attractor, A1 or the equilibrium set) for the
/// configured pipeline.
std::vector<StateVector> TargetPoints(const ExperimentConfig& config,
                                      const OdeSystem& system);
EquilibriumSet ResolveEquilibriumSet(const ExperimentConfig& config,
                                     const OdeSystem& system);

PipelineResult RunPipeline(const ExperimentConfig& config,
                           const OdeSystem& system,
                           const std::vector<Trajectory>& batch);

struct CommandReport {
  std::vector<std::string> files;
  nlohmann::json summary;
};

/// Each command reads its inputs from and writes its artifacts to
/// config.output_dir.
CommandReport RunSimulate(const ExperimentConfig& config);
CommandReport RunEstimate(const ExperimentConfig& config);
CommandReport RunValidate(const ExperimentConfig& config);
CommandReport RunLevelset(const ExperimentConfig& config);
CommandReport RunHistogram(const ExperimentConfig& config);

}  // namespace roa
