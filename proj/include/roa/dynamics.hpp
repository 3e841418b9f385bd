#pragma once

#include <array>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "roa/numerics.hpp"
#include "roa/trajectory.hpp"

namespace roa {

/// Raised when a vector field is evaluated at a state where it is undefined.
class SingularStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VectorField = std::function<StateVector(const StateVector&)>;

/// An autonomous ODE x' = f(x) with optional declared equilibria.
class OdeSystem {
 public:
  /// Throws std::invalid_argument if some declared equilibrium e has
  /// ||f(e)|| > 1e-8.
  OdeSystem(std::string name, int dim, VectorField field,
            std::vector<StateVector> equilibria = {},
            std::vector<std::string> state_names = {},
            std::vector<std::string> state_units = {});

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<StateVector>& equilibria() const { return equilibria_; }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::vector<std::string>& state_units() const { return state_units_; }

  StateVector operator()(const StateVector& x) const;

 private:
  std::string name_;
  int dim_;
  VectorField field_;
  std::vector<StateVector> equilibria_;
  std::vector<std::string> state_names_;
  std::vector<std::string> state_units_;
};

// ---------------------------------------------------------------------------
// Generic Transport Model, longitudinal axis.
// State order: [V_A (m/s), gamma_A (rad), q (rad/s), alpha (rad)].

struct GtmParameters {
  double wing_area{0.550};        // S, m^2
  double chord{0.280};            // mean aerodynamic chord, m
  double mass{26.190};            // kg
  double iyy{5.768};              // kg m^2
  double thrust_offset{0.100};    // l_t, m
  double x_cg{-1.450};            // m
  double z_cg{-0.300};            // m
  double x_cg_ref{-1.460};        // m
  double z_cg_ref{-0.290};        // m
  double rho{1.200};              // kg/m^3
  double gravity{9.810};          // m/s^2
  double elevator{0.0};           // eta, rad
  double thrust{20.0};            // F, N

  /// Throws std::invalid_argument unless every physical constant is positive.
  void Validate() const;
};

struct AeroCoefficients {
  double cd{0.0};
  double cl{0.0};
  double cm{0.0};
  double cx{0.0};
  double cz{0.0};
};

struct AeroValidityBox {
  std::array<double, 2> alpha{-3.2, 3.2};
  std::array<double, 2> eta{-0.6, 0.6};
  std::array<double, 2> qhat{-1.0, 1.0};
};

class AeroCoefficientModel {
 public:
  virtual ~AeroCoefficientModel() = default;
  virtual AeroCoefficients Evaluate(double alpha, double eta,
                                    double qhat) const = 0;
  virtual AeroValidityBox validity() const = 0;
};

class ZeroAeroModel final : public AeroCoefficientModel {
 public:
  AeroCoefficients Evaluate(double, double, double) const override {
    return {};
  }
  AeroValidityBox validity() const override { return {}; }
};

/// Polynomial in (alpha, eta, qhat), optionally piecewise in alpha.
class PiecewisePolynomial3 {
 public:
  struct Term {
    std::array<int, 3> exponents{};
    double coefficient{0.0};
  };
  using Piece = std::vector<Term>;

  PiecewisePolynomial3() = default;
  /// `breakpoints` must be strictly increasing and pieces.size() ==
  /// breakpoints.size() + 1. Piece k covers [breakpoints[k-1], breakpoints[k]).
  PiecewisePolynomial3(std::vector<double> breakpoints,
                       std::vector<Piece> pieces);

  double Evaluate(double alpha, double eta, double qhat) const;
  static double EvaluatePiece(const Piece& piece, double alpha, double eta,
                              double qhat);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  /// Largest jump across any breakpoint, probed on a grid over (eta, qhat).
  double MaxBreakpointJump(const AeroValidityBox& box) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<Piece> pieces_{Piece{}};
};

/// Aerodynamic coefficients given as (piecewise) polynomials. Loads from and
/// saves to the JSON coefficient-file format:
///
///   {"validity": {"alpha": [lo, hi], "eta": [lo, hi], "qhat": [lo, hi]},
///    "coefficients": {
///      "CD": [[[i, j, k], c], ...],                       // single piece
///      "CL": {"breakpoints": [a1, ...],
///             "pieces": [[[[i, j, k], c], ...], ...]},    // piecewise
///      ...}}
///
/// Missing coefficients are identically zero. Construction fails if any
/// breakpoint jump exceeds 1e-6.
class PolynomialAeroModel final : public AeroCoefficientModel {
 public:
  static constexpr double kContinuityTol = 1e-6;

  PolynomialAeroModel(PiecewisePolynomial3 cd, PiecewisePolynomial3 cl,
                      PiecewisePolynomial3 cm, PiecewisePolynomial3 cx,
                      PiecewisePolynomial3 cz, AeroValidityBox validity);

  static PolynomialAeroModel FromJson(const nlohmann::json& j);
  static PolynomialAeroModel LoadFile(const std::string& path);
  nlohmann::json ToJson() const;

  AeroCoefficients Evaluate(double alpha, double eta,
                            double qhat) const override;
  AeroValidityBox validity() const override { return validity_; }

 private:
  PiecewisePolynomial3 cd_, cl_, cm_, cx_, cz_;
  AeroValidityBox validity_;
};

/// Low-order polynomial stand-in for the GTM aerodynamics with a linear lift
/// curve up to +-0.3 rad and a post-stall rolloff. Not a fit to wind-tunnel
/// data; it exists so the GTM pipeline runs without external files.
PolynomialAeroModel SurrogateAeroModel();

/// Longitudinal equations of motion. Throws SingularStateError if V_A <= 0.
StateVector GtmVectorField(const StateVector& x, const GtmParameters& params,
                           const AeroCoefficientModel& aero);

/// Newton solve for a trim state (q = 0) near `guess`. Throws
/// std::runtime_error if no root with ||f|| <= 1e-10 is found.
StateVector FindGtmTrim(const GtmParameters& params,
                        const AeroCoefficientModel& aero,
                        const StateVector& guess);

/// GTM system with its trim point declared as the equilibrium.
OdeSystem MakeGtmSystem(const GtmParameters& params,
                        std::shared_ptr<const AeroCoefficientModel> aero);

// ---------------------------------------------------------------------------
// Planar test systems.

/// Reverse-time Van der Pol centred on (-1, 2).
StateVector VdpReverseVectorField(const StateVector& x);
/// Forward-time Van der Pol centred on (-1, 2); has a stable limit cycle.
StateVector VdpForwardVectorField(const StateVector& x);
/// Damped pendulum, angle measured from the inverted position:
/// x1' = x2, x2' = sin(x1) - c x2.
StateVector PendulumVectorField(const StateVector& x, double damping);

OdeSystem MakeVanDerPolReverse();
OdeSystem MakeVanDerPolForward();
/// Declares the hanging equilibria (+-pi, 0), (+-3pi, 0) and the inverted ones
/// (0, 0), (+-2pi, 0).
OdeSystem MakeDampedPendulum(double damping = 0.5);
/// x' = -x in R^n.
OdeSystem MakeLinearDecay(int n = 1);

// ---------------------------------------------------------------------------
// Integration.

struct IntegratorConfig {
  double dt{0.01};
  double run_time{30.0};
  int record_stride{10};

  /// Number of RK4 steps; throws if dt <= 0 or run_time / dt is not integral
  /// to within rounding.
  long long NumSteps() const;
};

/// One classical RK4 step.
StateVector Rk4Step(const OdeSystem& system, const StateVector& x, double dt);

/// Fixed-step RK4 from x0 until run_time or until the state leaves `limits`
/// (or becomes non-finite, or the vector field throws), in which case the
/// trajectory is labeled divergent and exit_time is set.
Trajectory Integrate(const OdeSystem& system, const StateVector& x0,
                     const IntegratorConfig& cfg, const StateBox& limits,
                     int id = 0);

}  // namespace roa
