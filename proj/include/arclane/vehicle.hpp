#pragma once

#include <functional>

#include "arclane/path.hpp"

namespace arclane {

/// Kinematic model and controller parameters (all angles in radians).
struct VehicleParams {
  double wheelbase = 2.57;      // l [m]
  double camera_offset = 2.0;   // d, camera point Q to rear axle [m]
  double fov_half_angle = 0.0;  // delta (0, pi/2] [rad]
  double speed = 20.0;          // V [m/s], constant
  double gamma_sat = 0.0;       // steering saturation (0, pi/2) [rad]
  double k1 = 0.0;              // feedback gain on the composite error
  double k2 = 0.0;              // feedback gain on lateral deviation [1/m]
};

/// Throws std::invalid_argument when a parameter is out of range.
void validate(const VehicleParams& params);

/// Camera point Q in the earth-fixed frame.
struct Pose2D {
  double x_q = 0.0;  // [m]
  double y_q = 0.0;  // [m]
  double psi = 0.0;  // heading [rad]
};

struct Pose2DRate {
  double x_dot = 0.0;
  double y_dot = 0.0;
  double psi_dot = 0.0;
};

/// Vehicle state relative to the path as observed in the camera FOV.
struct RelativeState {
  double s_omega = 0.0;      // arc length travelled [m]
  double eps_omega = 0.0;    // observed distance, positive left of path [m]
  double theta_omega = 0.0;  // relative heading psi - alpha_omega [rad]
};

struct RelativeStateRate {
  double s_dot = 0.0;
  double eps_dot = 0.0;
  double theta_dot = 0.0;
};

struct Equilibrium {
  double theta_star = 0.0;  // [rad]
  double sdot_star = 0.0;   // [m/s]; eps* = 0
};

/// Point-Q kinematics in the earth-fixed frame.
Pose2DRate absolute_dynamics(const Pose2D& pose, double gamma, const VehicleParams& params);

/// Path-frame dynamics of (s, eps, theta) with the curvature at the observed
/// point. Throws ObservabilityError when sin(delta - theta) degenerates.
RelativeStateRate relative_dynamics(const RelativeState& rel, double gamma, double kappa_omega,
                                    const VehicleParams& params);

/// Reconstruct the pose of Q from the relative state and the path geometry.
Pose2D absolute_from_relative(const RelativeState& rel, const PathTable& path, double delta);

/// Odd soft saturation (2/pi) atan(pi/2 x); |g| < 1.
double wrapper_g(double x);

/// Feedforward + feedback steering command, clamped to [-gamma_sat, gamma_sat].
/// Throws InfeasibleCurvatureError when |camera_offset * kappa_D| >= 1.
double controller(double kappa_d, double theta_d, double eps_d, const VehicleParams& params);

/// Desired equilibrium of the closed loop on a constant-curvature path.
Equilibrium equilibrium(double kappa_star, const VehicleParams& params);

/// One classical RK4 step of the absolute dynamics with steering held.
Pose2D absolute_rk4_step(const Pose2D& pose, double gamma, const VehicleParams& params, double dt);

/// One classical RK4 step of the relative dynamics; kappa_of_s supplies the
/// path curvature at the stage arc lengths.
RelativeState relative_rk4_step(const RelativeState& rel, double gamma,
                                const std::function<double(double)>& kappa_of_s,
                                const VehicleParams& params, double dt);

}  // namespace arclane
