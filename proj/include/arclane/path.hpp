#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "arclane/curve.hpp"

namespace arclane {

/// Curvature of a planar curve as an analytic function of arc length,
/// together with its first three derivatives (consumed directly by the
/// local-representation formulas).
struct CurvatureProfile {
  std::function<double(double)> kappa;    // [1/m]
  std::function<double(double)> dkappa;   // [1/m^2]
  std::function<double(double)> d2kappa;  // [1/m^3]
  std::function<double(double)> d3kappa;  // [1/m^4]
  std::string name;                       // "cosine", "constant"
  double kappa_max = 0.0;                 // cosine parameters
  double s_period = 0.0;
};

/// One sample of the ground-truth path: dx/ds = cos(alpha),
/// dy/ds = sin(alpha), dalpha/ds = kappa(s).
struct PathState {
  double s = 0.0;      // arc length [m]
  double x = 0.0;      // [m]
  double y = 0.0;      // [m]
  double alpha = 0.0;  // slope angle [rad], continuous (not wrapped)
};

/// Uniformly sampled path with step h; a final partial row may follow the
/// uniform grid so the table always ends exactly at the requested arc length.
struct PathTable {
  std::vector<PathState> states;
  double h = 0.0;
  bool closed = false;      // wrap-around lookups allowed
  double perimeter = 0.0;   // [m], meaningful when closed
  double winding = 0.0;     // alpha advance per lap [rad], when closed
  CurvatureProfile profile;

  double s_front() const { return states.front().s; }
  double s_back() const { return states.back().s; }
};

/// kappa(s) = kappa_max/2 * (1 - cos(2 pi s / s_period)).
CurvatureProfile cosine_profile(double kappa_max, double s_period);

CurvatureProfile constant_profile(double kappa);

/// True when kappa_max * s_period == 4 pi / corners (the cosine path closes
/// with `corners` corners and perimeter corners * s_period).
bool closure_check(double kappa_max, double s_period, int corners);

/// Classical fixed-step RK4 integration of the path kinematics from `init`
/// to s_end; a final partial step lands exactly on s_end.
PathTable integrate_path(const CurvatureProfile& profile, const PathState& init, double s_end,
                         double h);

/// Mark a freshly integrated table as a closed loop with the given perimeter.
void mark_closed(PathTable& table);

/// Cubic interpolation of x, y and alpha; on a closed table s wraps modulo
/// the perimeter with the winding added to alpha.
PathState state_at(const PathTable& table, double s);

/// Fifth-order parametric representation of the curve about `state`
/// (arc-length normalized; s0 = state.s).
ParametricRepr param_repr_at(const CurvatureProfile& profile, const PathState& state);

/// Fifth-order function representation about `state`; throws
/// VerticalTangentError when |cos(alpha)| < 1e-6.
FunctionRepr func_repr_at(const CurvatureProfile& profile, const PathState& state);

/// CSV with header `s,x,y,alpha,kappa` at the table sampling.
void write_path_csv(const PathTable& table, std::ostream& out);

}  // namespace arclane
