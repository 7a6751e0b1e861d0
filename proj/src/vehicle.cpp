#include "arclane/vehicle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "arclane/errors.hpp"

namespace arclane {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// sign with sign(0) = +1; every appearance multiplies |eps|, so both
// branches coincide in the limit.
double signp(double v) { return v < 0.0 ? -1.0 : 1.0; }

void require_steering(double gamma) {
  if (!(std::abs(gamma) < kHalfPi))
    throw std::invalid_argument("steering angle must satisfy |gamma| < pi/2");
}

}  // namespace

void validate(const VehicleParams& p) {
  if (!(p.wheelbase > 0.0)) throw std::invalid_argument("wheelbase must be positive");
  if (!(p.fov_half_angle > 0.0 && p.fov_half_angle <= kHalfPi))
    throw std::invalid_argument("FOV half angle must be in (0, pi/2]");
  if (!(p.gamma_sat > 0.0 && p.gamma_sat < kHalfPi))
    throw std::invalid_argument("steering saturation must be in (0, pi/2)");
  if (!(p.speed > 0.0)) throw std::invalid_argument("speed must be positive");
}

Pose2DRate absolute_dynamics(const Pose2D& pose, double gamma, const VehicleParams& p) {
  require_steering(gamma);
  const double omega = p.speed / p.wheelbase * std::tan(gamma);
  const double c = std::cos(pose.psi);
  const double s = std::sin(pose.psi);
  return {p.speed * c - p.camera_offset * omega * s,
          p.speed * s + p.camera_offset * omega * c,
          omega};
}

RelativeStateRate relative_dynamics(const RelativeState& rel, double gamma, double kappa_omega,
                                    const VehicleParams& p) {
  require_steering(gamma);
  const double delta = p.fov_half_angle;
  const double theta = rel.theta_omega;
  const double sd = std::sin(delta - theta);
  if (sd < 1e-9)
    throw ObservabilityError("sin(delta - theta) degenerate: the observed point left the FOV");

  const double tg = std::tan(gamma);
  const double dol = p.camera_offset / p.wheelbase;
  const double omega = p.speed / p.wheelbase * tg;  // yaw rate V/l tan(gamma)
  const double eps_abs = std::abs(rel.eps_omega);
  const double sg = signp(rel.eps_omega);
  const double fov_term = std::cos(delta - sg * delta);  // 1 for eps >= 0, cos(2 delta) else
  const double along = std::sin(delta) + dol * std::cos(delta) * tg;

  RelativeStateRate rate;
  rate.s_dot = p.speed * along / sd + eps_abs * fov_term / sd * omega;
  rate.eps_dot = p.speed * (std::sin(theta) + dol * std::cos(theta) * tg) / sd +
                 eps_abs * std::cos(delta - sg * theta) / sd * omega;
  rate.theta_dot = -p.speed * kappa_omega * along / sd +
                   (1.0 - kappa_omega * eps_abs * fov_term / sd) * omega;
  return rate;
}

Pose2D absolute_from_relative(const RelativeState& rel, const PathTable& path, double delta) {
  const PathState omega = state_at(path, rel.s_omega);
  const double eps_abs = std::abs(rel.eps_omega);
  const double sg = signp(rel.eps_omega);
  const double phase = omega.alpha + rel.theta_omega - sg * delta;
  Pose2D pose;
  pose.x_q = omega.x - eps_abs * std::cos(phase);
  pose.y_q = omega.y - eps_abs * std::sin(phase);
  pose.psi = omega.alpha + rel.theta_omega;
  return pose;
}

double wrapper_g(double x) { return 2.0 / std::numbers::pi * std::atan(kHalfPi * x); }

double controller(double kappa_d, double theta_d, double eps_d, const VehicleParams& p) {
  const double dk = p.camera_offset * kappa_d;
  if (!(std::abs(dk) < 1.0))
    throw InfeasibleCurvatureError("|camera_offset * kappa_D| >= 1: feedforward undefined");
  const double gamma_ff = std::atan(p.wheelbase * kappa_d / std::sqrt(1.0 - dk * dk));
  const double theta0 = -std::asin(dk);
  const double gamma_fb =
      p.gamma_sat *
      wrapper_g(p.k1 / p.gamma_sat * (theta_d - theta0 + std::atan(p.k2 * eps_d)));
  return std::clamp(gamma_ff + gamma_fb, -p.gamma_sat, p.gamma_sat);
}

Equilibrium equilibrium(double kappa_star, const VehicleParams& p) {
  const double dk = p.camera_offset * kappa_star;
  if (!(std::abs(dk) < 1.0))
    throw InfeasibleCurvatureError("|camera_offset * kappa| >= 1: no equilibrium");
  return {-std::asin(dk), p.speed / std::sqrt(1.0 - dk * dk)};
}

Pose2D absolute_rk4_step(const Pose2D& pose, double gamma, const VehicleParams& p, double dt) {
  auto advance = [&](const Pose2D& q, const Pose2DRate& r, double f) {
    return Pose2D{q.x_q + f * r.x_dot, q.y_q + f * r.y_dot, q.psi + f * r.psi_dot};
  };
  const Pose2DRate k1 = absolute_dynamics(pose, gamma, p);
  const Pose2DRate k2 = absolute_dynamics(advance(pose, k1, 0.5 * dt), gamma, p);
  const Pose2DRate k3 = absolute_dynamics(advance(pose, k2, 0.5 * dt), gamma, p);
  const Pose2DRate k4 = absolute_dynamics(advance(pose, k3, dt), gamma, p);
  return {pose.x_q + dt / 6.0 * (k1.x_dot + 2.0 * k2.x_dot + 2.0 * k3.x_dot + k4.x_dot),
          pose.y_q + dt / 6.0 * (k1.y_dot + 2.0 * k2.y_dot + 2.0 * k3.y_dot + k4.y_dot),
          pose.psi + dt / 6.0 * (k1.psi_dot + 2.0 * k2.psi_dot + 2.0 * k3.psi_dot + k4.psi_dot)};
}

RelativeState relative_rk4_step(const RelativeState& rel, double gamma,
                                const std::function<double(double)>& kappa_of_s,
                                const VehicleParams& p, double dt) {
  auto deriv = [&](const RelativeState& r) {
    return relative_dynamics(r, gamma, kappa_of_s(r.s_omega), p);
  };
  auto advance = [&](const RelativeState& r, const RelativeStateRate& k, double f) {
    return RelativeState{r.s_omega + f * k.s_dot, r.eps_omega + f * k.eps_dot,
                         r.theta_omega + f * k.theta_dot};
  };
  const RelativeStateRate k1 = deriv(rel);
  const RelativeStateRate k2 = deriv(advance(rel, k1, 0.5 * dt));
  const RelativeStateRate k3 = deriv(advance(rel, k2, 0.5 * dt));
  const RelativeStateRate k4 = deriv(advance(rel, k3, dt));
  return {rel.s_omega + dt / 6.0 * (k1.s_dot + 2.0 * k2.s_dot + 2.0 * k3.s_dot + k4.s_dot),
          rel.eps_omega + dt / 6.0 * (k1.eps_dot + 2.0 * k2.eps_dot + 2.0 * k3.eps_dot + k4.eps_dot),
          rel.theta_omega +
              dt / 6.0 * (k1.theta_dot + 2.0 * k2.theta_dot + 2.0 * k3.theta_dot + k4.theta_dot)};
}

}  // namespace arclane
