#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "roa/dynamics.hpp"
#include "roa/numerics.hpp"

namespace roa {

/// The affine polynomial x[coord] - offset.
struct AffineFactor {
  int coord{0};
  double offset{0.0};

  double Evaluate(const StateVector& x) const { return x(coord) - offset; }
  friend auto operator<=>(const AffineFactor&, const AffineFactor&) = default;
};

/// Basis of products of affine factors that vanishes on a finite set of
/// equilibria A1.
///
/// Each point x_(i) contributes the factors {x_j - x_(i),j : j = 1..n}. The
/// pool is the set union of those factors, so a factor shared by two points
/// (equal coordinate value) appears once. A basis entry is the product over
/// a multiset C of pool factors with 1 <= |C| <= d that contains at least one
/// factor of every point. Entries are ordered by size, then by the sorted
/// pool indices.
class EquilibriumSetBasis {
 public:
  /// Throws std::invalid_argument if the points are empty, not distinct or
  /// of mixed dimension, if d < 1, or if no multiset of size <= d meets every
  /// point.
  static EquilibriumSetBasis Build(std::vector<StateVector> points, int d);

  int num_vars() const { return n_; }
  int degree() const { return d_; }
  int size() const { return static_cast<int>(products_.size()); }
  const std::vector<StateVector>& points() const { return points_; }
  const std::vector<AffineFactor>& factor_pool() const { return pool_; }
  /// Sorted pool indices for each basis entry.
  const std::vector<std::vector<int>>& products() const { return products_; }

  Eigen::VectorXd Evaluate(const StateVector& x) const;

  friend bool operator==(const EquilibriumSetBasis& a,
                         const EquilibriumSetBasis& b) {
    if (a.n_ != b.n_ || a.d_ != b.d_ || a.pool_ != b.pool_ ||
        a.products_ != b.products_ || a.points_.size() != b.points_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.points_.size(); ++i) {
      if (a.points_[i] != b.points_[i]) return false;
    }
    return true;
  }

 private:
  int n_{0};
  int d_{0};
  std::vector<StateVector> points_;
  std::vector<AffineFactor> pool_;
  std::vector<std::vector<int>> products_;
};

/// Equilibrium points plus limit cycles, each cycle a closed polyline.
struct EquilibriumSet {
  std::vector<StateVector> points;
  std::vector<std::vector<StateVector>> cycles;

  int dim() const;
  bool empty() const { return points.empty() && cycles.empty(); }
  /// Throws std::invalid_argument on an empty set, mixed dimensions,
  /// non-finite coordinates or a cycle with fewer than 3 vertices.
  void Validate() const;
};

/// Squared Euclidean distance from x to the nearest point or polyline
/// segment (closing segment included) of the set.
double SquaredDistanceToSet(const EquilibriumSet& set, const StateVector& x);

/// r(x) weighting for the general equilibrium-set pipeline.
class WeightFunction {
 public:
  static constexpr double kDefaultSnapTol = 1e-9;

  /// r(x) = squared distance to `set`, snapped to 0 below snap_tol^2.
  static WeightFunction Distance(EquilibriumSet set,
                                 double snap_tol = kDefaultSnapTol);
  /// r(x) = value everywhere.
  static WeightFunction Constant(double value);

  double operator()(const StateVector& x) const;
  const std::optional<EquilibriumSet>& set() const { return set_; }
  double snap_tol() const { return snap_tol_; }
  std::optional<double> constant() const { return constant_; }

 private:
  std::optional<EquilibriumSet> set_;
  std::optional<double> constant_;
  double snap_tol_{kDefaultSnapTol};
};

struct LimitCycle {
  std::vector<StateVector> vertices;
  double period{0.0};
  /// Distance between the start point and the state one period later.
  double return_distance{0.0};
};

/// Integrates past a transient, then records one revolution of the orbit
/// through the resulting point. The period is found by nearest-return search
/// and refined by golden-section search on the return distance. Throws
/// std::runtime_error if no return is found within max_period.
LimitCycle DiscretizeLimitCycle(const OdeSystem& system, const StateVector& x0,
                                double dt, double transient_time,
                                double max_period);

}  // namespace roa
