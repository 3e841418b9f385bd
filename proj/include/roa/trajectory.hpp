#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roa/numerics.hpp"

namespace roa {

enum class Label { kConvergent, kDivergent };

const char* LabelName(Label label);
Label ParseLabel(const std::string& name);

/// Axis-aligned box in state space. lower[i] <= upper[i]; a degenerate
/// coordinate (lower == upper) pins that coordinate.
class StateBox {
 public:
  StateBox() = default;
  StateBox(std::vector<double> lower, std::vector<double> upper);

  int dim() const { return static_cast<int>(lower_.size()); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  bool Contains(const StateVector& x) const;
  /// True when every coordinate has lower < upper.
  bool IsStrict() const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// Time-sampled solution from one initial condition. samples[j] is the state
/// at time j * sample_dt; samples[0] == x0.
struct Trajectory {
  int id{0};
  StateVector x0;
  std::vector<StateVector> samples;
  double dt{0.0};       // integrator step
  int stride{1};        // integrator steps per recorded sample
  Label label{Label::kConvergent};
  std::optional<double> exit_time;
  /// Index of the declared equilibrium the trajectory settled on, when known.
  std::optional<int> target;
  std::string diagnostic;

  double sample_dt() const { return dt * stride; }
  /// K, the index of the last sample.
  int last_index() const { return static_cast<int>(samples.size()) - 1; }
};

}  // namespace roa
