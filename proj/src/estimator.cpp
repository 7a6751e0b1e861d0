#include "arclane/estimator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "arclane/errors.hpp"

namespace arclane {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double signp(double v) { return v < 0.0 ? -1.0 : 1.0; }

void require_intercept_origin(const ParametricRepr& phi) {
  if (std::abs(phi.s0) > 1e-12)
    throw std::invalid_argument("lane representation must be expanded about s0 = 0");
}

}  // namespace

std::vector<double> EvolutionModel::apply(const std::vector<double>& vec_phi) const {
  const size_t dim = b.size();
  if (vec_phi.size() != dim)
    throw std::invalid_argument("coefficient vector size does not match evolution model");
  std::vector<double> out(dim, 0.0);
  for (size_t i = 0; i < dim; ++i) {
    double acc = b[i];
    const double* row = a.data() + i * dim;
    for (size_t j = 0; j < dim; ++j) acc += row[j] * vec_phi[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> vec_coeffs(const ParametricRepr& repr) {
  std::vector<double> v;
  v.reserve(2 * repr.xcoeffs.size());
  for (size_t n = 0; n < repr.xcoeffs.size(); ++n) {
    v.push_back(repr.xcoeffs[n]);
    v.push_back(repr.ycoeffs[n]);
  }
  return v;
}

ParametricRepr coeffs_from_vec(const std::vector<double>& v, double s0,
                               bool arclength_normalized) {
  if (v.size() % 2 != 0) throw std::invalid_argument("vectorized coefficients must pair up");
  ParametricRepr repr;
  repr.s0 = s0;
  repr.arclength_normalized = arclength_normalized;
  for (size_t n = 0; n < v.size(); n += 2) {
    repr.xcoeffs.push_back(v[n]);
    repr.ycoeffs.push_back(v[n + 1]);
  }
  return repr;
}

PerceptionFrame perceive(const RelativeState& rel, const CurvatureProfile& profile,
                         const PathTable& path, double delta) {
  const double theta = rel.theta_omega;
  if (!(std::abs(theta) < kHalfPi))
    throw PerceptionError("relative heading at or beyond pi/2: lane is not a function of tau");
  state_at(path, rel.s_omega);  // range check: the observed point must exist

  const double k = profile.kappa(rel.s_omega);
  const double k1 = profile.dkappa(rel.s_omega);
  const double k2 = profile.d2kappa(rel.s_omega);
  const double k3 = profile.d3kappa(rel.s_omega);

  const double ct = std::cos(theta);
  const double tt = std::tan(theta);
  const double c2 = ct * ct;
  const double c3 = c2 * ct;
  const double c4 = c3 * ct;
  const double c5 = c4 * ct;
  const double c6 = c5 * ct;
  const double c7 = c6 * ct;
  const double c8 = c7 * ct;

  const double tau_omega = std::abs(rel.eps_omega) * std::cos(delta);

  FunctionRepr about_omega;
  about_omega.x0 = tau_omega;
  about_omega.coeffs = {
      -rel.eps_omega * std::sin(delta),
      -tt,
      k / (2.0 * c3),
      (k1 - 3.0 * k * k * tt) / (6.0 * c4),
      5.0 * k * k * k / (8.0 * c7) + (k2 - 12.0 * k * k * k - 10.0 * k * k1 * tt) / (24.0 * c5),
      7.0 * k * k * (k1 - k * k * tt) / (8.0 * c8) + (k3 - 86.0 * k * k * k1) / (120.0 * c6) +
          (12.0 * k * k * k * k - 3.0 * k * k2 - 2.0 * k1 * k1) * tt / (24.0 * c6)};

  PerceptionFrame frame;
  frame.tau_omega = tau_omega;
  frame.coeffs = shift_function(about_omega, -tau_omega);  // re-expand about tau = 0
  frame.coeffs.x0 = 0.0;
  return frame;
}

StateChanges estimate_state_changes(double v_k, double omega_k, double t_step, double eps_d,
                                    double theta_d, const VehicleParams& params,
                                    std::optional<double> psi_k) {
  if (!(t_step > 0.0)) throw std::invalid_argument("step size must be positive");
  const double ct = std::cos(theta_d);
  if (std::abs(ct) < 1e-9)
    throw std::domain_error("cos(theta_D) degenerate: intercept advance undefined");

  StateChanges ch;
  ch.tau_t = v_k * t_step;
  ch.eta_t = params.camera_offset * omega_k * t_step;
  ch.psi_t = omega_k * t_step;
  ch.s_t = (v_k + omega_k * eps_d) * t_step / ct;
  if (psi_k) {
    const double c = std::cos(*psi_k);
    const double s = std::sin(*psi_k);
    ch.x_t = (v_k * c - params.camera_offset * omega_k * s) * t_step;
    ch.y_t = (v_k * s + params.camera_offset * omega_k * c) * t_step;
    ch.earth_frame_valid = true;
  }
  return ch;
}

ParametricRepr evolve_coeffs(const ParametricRepr& phi, const StateChanges& ch) {
  require_intercept_origin(phi);
  const RigidMotion2D motion{ch.psi_t, ch.tau_t, ch.eta_t};
  ParametricRepr out = shift_parametric(transform_parametric(phi, motion), ch.s_t);
  out.s0 = 0.0;  // relabel: arc length is measured from the new intercept
  return out;
}

EvolutionModel linearize(const StateChanges& ch, int order) {
  if (order < 1) throw std::invalid_argument("evolution model requires order >= 1");
  EvolutionModel model;
  model.order = order;
  model.psi = ch.psi_t;
  model.dx = ch.tau_t;
  model.dy = ch.eta_t;
  model.shift = shift_matrix(ch.s_t, order);

  const int nc = order + 1;
  const size_t dim = static_cast<size_t>(2 * nc);
  const double c = std::cos(ch.psi_t);
  const double s = std::sin(ch.psi_t);
  const double rt[2][2] = {{c, s}, {-s, c}};  // R^T

  model.a.assign(dim * dim, 0.0);
  for (int i = 0; i < nc; ++i)
    for (int j = i; j < nc; ++j) {
      const double tij = model.shift.at(i, j);
      for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col)
          model.a[(static_cast<size_t>(2 * i + r)) * dim + (2 * j + col)] = tij * rt[r][col];
    }

  // B = -A vec(D); vec(D) has only the first column populated.
  model.b.assign(dim, 0.0);
  for (size_t i = 0; i < dim; ++i)
    model.b[i] = -(model.a[i * dim] * ch.tau_t + model.a[i * dim + 1] * ch.eta_t);
  return model;
}

ControlInputs extract_control_inputs(const ParametricRepr& phi) {
  require_intercept_origin(phi);
  const double b1 = phi.xcoeffs[1];
  const double h1 = phi.ycoeffs[1];
  const double speed2 = b1 * b1 + h1 * h1;
  if (speed2 < 1e-12)
    throw SingularCurveError("degenerate lane representation: first-order coefficients vanish");
  const double b2 = phi.order() >= 2 ? phi.xcoeffs[2] : 0.0;
  const double h2 = phi.order() >= 2 ? phi.ycoeffs[2] : 0.0;
  ControlInputs out;
  out.eps_d = -phi.ycoeffs[0];
  out.theta_d = -std::atan2(h1, b1);
  out.kappa_d = (2.0 * h2 * b1 - 2.0 * h1 * b2) / speed2;
  return out;
}

FunctionRepr perturb(const FunctionRepr& repr, const PerceptionNoise& noise,
                     std::mt19937_64& rng) {
  if (!noise.enabled) return repr;
  FunctionRepr out = repr;
  std::normal_distribution<double> unit(0.0, 1.0);
  for (size_t n = 0; n < out.coeffs.size() && n < noise.sigma.size(); ++n)
    out.coeffs[n] += noise.sigma[n] * unit(rng);
  return out;
}

const ParametricRepr& LaneEstimator::lane() const {
  if (!initialized_) throw std::logic_error("no lane estimate yet");
  return lane_;
}

void LaneEstimator::replace(const FunctionRepr& measured) {
  lane_ = func_to_param(measured);
  initialized_ = true;
}

void LaneEstimator::predict(const StateChanges& ch) {
  lane_ = evolve_coeffs(lane(), ch);
}

}  // namespace arclane
