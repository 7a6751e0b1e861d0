#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "arclane/curve.hpp"
#include "arclane/path.hpp"
#include "arclane/vehicle.hpp"

namespace arclane {

/// Simulated perception output: lane polynomial in the body frame about
/// the eta-intercept (tau = 0).
struct PerceptionFrame {
  FunctionRepr coeffs;       // x0 = 0
  double timestamp = 0.0;    // [s], assigned by the caller
  double tau_omega = 0.0;    // abscissa of the observed point, |eps| cos(delta) [m]
};

/// Vehicle state changes over one step, as estimated from onboard data.
struct StateChanges {
  double x_t = 0.0;    // earth-frame displacement [m]
  double y_t = 0.0;
  double psi_t = 0.0;  // heading change [rad]
  double tau_t = 0.0;  // body-frame displacement [m]
  double eta_t = 0.0;
  double s_t = 0.0;    // arc-length advance of the eta-intercept [m]
  bool earth_frame_valid = false;  // x_t, y_t populated (heading supplied)
};

/// The coefficient evolution written as vec(phi_{k+1}) = A vec(phi_k) + B,
/// with A = T(s_t) (x) R^T. vec stacks the 2 x (N+1) coefficient matrix
/// column by column: [phibar_0, phihat_0, phibar_1, phihat_1, ...].
struct EvolutionModel {
  int order = 0;
  double psi = 0.0;        // rotation angle of the step
  double dx = 0.0;         // first column of D (body-frame displacement)
  double dy = 0.0;
  ShiftMatrix shift;       // T(s_t)
  std::vector<double> a;   // row-major (2(N+1))^2
  std::vector<double> b;   // 2(N+1)

  std::vector<double> apply(const std::vector<double>& vec_phi) const;
};

std::vector<double> vec_coeffs(const ParametricRepr& repr);
ParametricRepr coeffs_from_vec(const std::vector<double>& v, double s0,
                               bool arclength_normalized);

/// Lane polynomial the camera would report for the given relative state:
/// fifth-order Taylor row about the observed point, re-expanded about the
/// eta-intercept. Throws PerceptionError when |theta| >= pi/2.
PerceptionFrame perceive(const RelativeState& rel, const CurvatureProfile& profile,
                         const PathTable& path, double delta);

/// Euler-integrated state changes over one control period from measurable
/// data (speed, yaw rate) and the current lane attributes at the intercept.
StateChanges estimate_state_changes(double v_k, double omega_k, double t_step, double eps_d,
                                    double theta_d, const VehicleParams& params,
                                    std::optional<double> psi_k = std::nullopt);

/// One prediction step of the lane coefficients: rotate-translate into the
/// new body frame, then shift the expansion point along the lane.
ParametricRepr evolve_coeffs(const ParametricRepr& phi, const StateChanges& ch);

/// Closed form of the same step as a linear system on vec(phi).
EvolutionModel linearize(const StateChanges& ch, int order);

struct ControlInputs {
  double eps_d = 0.0;    // [m]
  double theta_d = 0.0;  // [rad]
  double kappa_d = 0.0;  // [1/m]
};

/// Lateral deviation, relative heading and curvature at the eta-intercept.
ControlInputs extract_control_inputs(const ParametricRepr& phi);

/// Optional additive Gaussian perturbation of perceived coefficients,
/// default off. One seeded generator per scenario keeps runs reproducible.
struct PerceptionNoise {
  bool enabled = false;
  std::array<double, 6> sigma{};  // per-order standard deviations
  std::uint64_t seed = 0;
};

FunctionRepr perturb(const FunctionRepr& repr, const PerceptionNoise& noise,
                     std::mt19937_64& rng);

/// Holds the latest lane estimate between perception updates: a fresh
/// measurement replaces the state, prediction steps evolve it in place.
/// (A Kalman measurement update would slot in at replace().)
class LaneEstimator {
 public:
  bool has_lane() const { return initialized_; }
  const ParametricRepr& lane() const;

  void replace(const FunctionRepr& measured);
  void predict(const StateChanges& ch);

 private:
  ParametricRepr lane_;
  bool initialized_ = false;
};

}  // namespace arclane
