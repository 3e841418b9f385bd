#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "roa/dataset.hpp"
#include "roa/equilibrium_sets.hpp"
#include "roa/numerics.hpp"
#include "roa/sdp.hpp"

namespace roa {

/// x -> z(x). A monomial basis is evaluated at (x - shift) / scale
/// (elementwise); an equilibrium-set basis is evaluated at x directly.
class FeatureMap {
 public:
  /// Throws std::invalid_argument on size mismatch or a non-positive scale.
  FeatureMap(MonomialBasis basis, StateVector shift, StateVector scale);
  FeatureMap(MonomialBasis basis, StateVector shift);
  explicit FeatureMap(EquilibriumSetBasis basis);

  /// Per-coordinate scale max_i |x_i - shift| over `xs`, 1 where that is 0.
  static StateVector FitScale(const std::vector<StateVector>& xs,
                              const StateVector& shift);

  int num_vars() const;
  int size() const;
  Eigen::VectorXd Evaluate(const StateVector& x) const;

  const MonomialBasis* monomial() const {
    return std::get_if<MonomialBasis>(&basis_);
  }
  const EquilibriumSetBasis* equilibrium_set() const {
    return std::get_if<EquilibriumSetBasis>(&basis_);
  }
  const StateVector& shift() const { return shift_; }
  const StateVector& scale() const { return scale_; }

  friend bool operator==(const FeatureMap& a, const FeatureMap& b) {
    return a.basis_ == b.basis_ && a.shift_ == b.shift_ && a.scale_ == b.scale_;
  }

 private:
  std::variant<MonomialBasis, EquilibriumSetBasis> basis_;
  StateVector shift_;
  StateVector scale_;
};

/// Outer product z z^T packed as a SymmetricMatrix, times `factor`.
SymmetricMatrix OuterProduct(const Eigen::VectorXd& z, double factor = 1.0);

/// L1 regression of y on z^T P z. Aux variable i is gamma_i; the objective
/// is -sum gamma_i and each point contributes
///   <z z^T, P> - gamma_i >= y_i  and  -<z z^T, P> - gamma_i >= -y_i.
/// Throws std::invalid_argument on an empty point list or a dimension
/// mismatch.
SdpProblem AssembleBasic(const std::vector<RegressionPoint>& points,
                         const FeatureMap& features);

/// AssembleBasic plus one aux variable t (index points.size()) with
///   w(d) <z_d z_d^T, P> - t >= margin   for every divergent d,
///   t - w(x) <z z^T, P> >= 0            for every regression point x,
/// where w is the weight function when given and 1 otherwise. The result has
/// 3m + s constraints. An empty divergent list gives AssembleBasic.
SdpProblem AssembleWithDivergent(
    const std::vector<RegressionPoint>& points,
    const std::vector<StateVector>& divergent_ics, const FeatureMap& features,
    double margin, const std::optional<WeightFunction>& weight = std::nullopt);

/// Divides each y_i by r(x_i) and records r in weight_r. Throws
/// std::invalid_argument naming the first point with r <= snap_tol^2.
std::vector<RegressionPoint> ApplyWeight(
    const std::vector<RegressionPoint>& points, const WeightFunction& weight);

/// AssembleBasic(ApplyWeight(points, weight), features).
SdpProblem AssembleGeneral(const std::vector<RegressionPoint>& points,
                           const FeatureMap& features,
                           const WeightFunction& weight);

struct EstimateProvenance {
  SdpStatus status{SdpStatus::kMaxIters};
  int iterations{0};
  double max_violation{0.0};
  std::string dataset_digest;
};

/// V*(x) = 10^(z(x)^T P z(x) * r(x)) - 1 with r = 1 unless a weight function
/// is attached. The estimated region is {x : V*(x) <= gamma_star}.
class LyapunovEstimate {
 public:
  LyapunovEstimate(FeatureMap features, SymmetricMatrix p, double gamma_star,
                   std::optional<WeightFunction> weight = std::nullopt,
                   EstimateProvenance provenance = {});

  /// Sets gamma_star to the max of V* over `points` (-inf when empty).
  static LyapunovEstimate FromPoints(
      FeatureMap features, SymmetricMatrix p,
      const std::vector<RegressionPoint>& points,
      std::optional<WeightFunction> weight = std::nullopt,
      EstimateProvenance provenance = {});

  /// z^T P z * r(x).
  double Exponent(const StateVector& x) const;
  double Value(const StateVector& x) const;
  bool Contains(const StateVector& x) const;

  const FeatureMap& features() const { return features_; }
  const SymmetricMatrix& p() const { return p_; }
  double gamma_star() const { return gamma_star_; }
  const std::optional<WeightFunction>& weight() const { return weight_; }
  const EstimateProvenance& provenance() const { return provenance_; }
  /// P identically zero or gamma_star not finite.
  bool degenerate() const;

 private:
  FeatureMap features_;
  SymmetricMatrix p_;
  double gamma_star_;
  std::optional<WeightFunction> weight_;
  EstimateProvenance provenance_;
};

LyapunovEstimate ExtractEstimate(const SdpSolution& solution,
                                 const FeatureMap& features,
                                 const std::vector<RegressionPoint>& points,
                                 std::optional<WeightFunction> weight,
                                 std::string dataset_digest = {});

struct GridAxis {
  int coord{0};
  double lo{0.0};
  double hi{0.0};
  int resolution{1};

  /// Coordinate of grid index k; the midpoint when resolution == 1.
  double At(int k) const;
};

/// V* over a 2-D slice. Values are row-major: index = iy * nx + ix.
struct LevelSetGrid {
  GridAxis x_axis;
  GridAxis y_axis;
  StateVector base;
  std::vector<double> vstar;
  std::vector<bool> member;

  StateVector StateAt(int ix, int iy) const;
};

/// `fixed` pins every coordinate other than the two free axes. Throws
/// std::invalid_argument when the axes coincide, overlap `fixed`, or leave a
/// coordinate unassigned, or when a resolution is < 1.
LevelSetGrid ComputeLevelSet(const LyapunovEstimate& estimate,
                             const std::map<int, double>& fixed,
                             const GridAxis& x_axis, const GridAxis& y_axis);

/// Counts per bin k = floor(v / width), covering [k w, (k+1) w). Values that
/// are not finite or whose bin index would not fit are counted in
/// `overflow`.
struct Histogram {
  double bin_width{0.0};
  std::map<long long, int> bins;
  int overflow{0};
  int total{0};

  void Add(double v);
};

struct VstarHistogram {
  Histogram convergent;
  Histogram divergent;
  /// Divergent initial conditions with V* > gamma_star.
  int outside_count{0};
};

/// Throws std::invalid_argument unless bin_width > 0.
VstarHistogram ComputeVstarHistogram(
    const LyapunovEstimate& estimate,
    const std::vector<StateVector>& convergent_ics,
    const std::vector<StateVector>& divergent_ics, double bin_width);

struct ConfusionMatrix {
  int true_in{0};
  int false_in{0};
  int true_out{0};
  int false_out{0};

  int total() const { return true_in + false_in + true_out + false_out; }
  /// Fraction classified correctly; 0 for an empty matrix.
  double accuracy() const;
};

/// Compares membership with `converges(x)` for each x.
ConfusionMatrix Validate(const LyapunovEstimate& estimate,
                         const std::vector<StateVector>& ics,
                         const std::function<bool(const StateVector&)>& converges);

}  // namespace roa
