#pragma once

#include <string>
#include <vector>

namespace arclane {

/// Truncated Taylor polynomial y(x) about an expansion abscissa:
///   y(x) = phi_0 + phi_1 (x - x0) + ... + phi_N (x - x0)^N
/// Coefficient phi_n carries unit m^(1-n).
struct FunctionRepr {
  double x0 = 0.0;             // expansion abscissa [m]
  std::vector<double> coeffs;  // phi_0..phi_N

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Arc-length parametric curve: a pair of truncated Taylor polynomials
///   x(s) = phibar_0 + phibar_1 (s - s0) + ...,  y(s) = phihat_0 + ...
/// When arclength_normalized is set, s is the true arc length at the
/// expansion point: phibar_1^2 + phihat_1^2 = 1 and
/// phibar_1 phibar_2 + phihat_1 phihat_2 = 0.
struct ParametricRepr {
  double s0 = 0.0;               // expansion arc length [m]
  std::vector<double> xcoeffs;   // phibar_0..phibar_N
  std::vector<double> ycoeffs;   // phihat_0..phihat_N
  bool arclength_normalized = false;

  int order() const { return static_cast<int>(xcoeffs.size()) - 1; }
};

/// Upper-triangular binomial matrix re-expanding a polynomial about a
/// shifted parameter: entry (m, n) = C(n, m) s_tilde^(n-m) for n >= m.
struct ShiftMatrix {
  int dim = 0;          // order + 1
  double s_tilde = 0.0;  // shift distance [m]
  std::vector<double> entries;  // row-major dim x dim

  double at(int m, int n) const { return entries[static_cast<size_t>(m) * dim + n]; }

  /// new_row = T * row^T, i.e. the coefficient row about the shifted point.
  std::vector<double> apply(const std::vector<double>& row) const;
};

/// Planar rigid motion mapping target-frame coordinates to source-frame
/// coordinates: r = R(psi) r_hat + d.
struct RigidMotion2D {
  double psi = 0.0;  // rotation angle [rad]
  double dx = 0.0;   // translation [m]
  double dy = 0.0;
};

/// Position and s-derivatives of a parametric curve at one parameter value.
struct ParametricJet {
  std::vector<double> x;  // x, dx/ds, d2x/ds2, ...
  std::vector<double> y;
};

/// Lane attributes at a preview point (Frenet-style extraction).
struct PreviewInfo {
  double epsilon = 0.0;  // lateral deviation [m], positive left of curve
  double theta = 0.0;    // relative heading [rad]
  double kappa = 0.0;    // curvature [1/m]
};

double eval_function(const FunctionRepr& repr, double x);

/// Evaluate (x, y) and all s-derivatives up to deriv_order at s.
/// Throws std::invalid_argument if deriv_order exceeds the order.
ParametricJet eval_parametric(const ParametricRepr& repr, double s, int deriv_order = 0);

ShiftMatrix shift_matrix(double s_tilde, int order);

/// Re-expand about s0 + s_tilde; same curve, shifted Taylor point.
ParametricRepr shift_parametric(const ParametricRepr& repr, double s_tilde);

/// Re-expand about x0 + x_tilde.
FunctionRepr shift_function(const FunctionRepr& repr, double x_tilde);

/// Express the curve in the target frame of `motion`; coefficients map as
/// phi_hat = R^T (phi - D) with D = [d, 0, ..., 0].
ParametricRepr transform_parametric(const ParametricRepr& repr, const RigidMotion2D& motion);

/// Exact map from function to arc-length parametric representation, valid
/// for orders up to 5 (lower orders are zero-padded). The expansion point
/// is taken as the arc-length origin: output s0 = 0, phibar_0 = 0.
ParametricRepr func_to_param(const FunctionRepr& repr);

/// Exact inverse map. Throws VerticalTangentError when |phibar_1| is below
/// `tangent_threshold` (the curve is not locally a function of x).
FunctionRepr param_to_func(const ParametricRepr& repr, double tangent_threshold = 1e-6);

/// Lateral deviation, relative heading and curvature at preview distance
/// s_p ahead of the expansion point. Throws SingularCurveError on a
/// degenerate tangent.
PreviewInfo extract_preview(const ParametricRepr& repr, double s_p);

/// First two orders of the unit-speed conditions; true when the
/// representation is arc-length normalized within tol.
bool check_arclength_normalization(const ParametricRepr& repr, double tol = 1e-9);

// Debug text serialization for test fixtures: one coefficient row per
// line, full decimal precision.
std::string to_debug_string(const FunctionRepr& repr);
std::string to_debug_string(const ParametricRepr& repr);
FunctionRepr function_from_debug_string(const std::string& text);
ParametricRepr parametric_from_debug_string(const std::string& text);

}  // namespace arclane
