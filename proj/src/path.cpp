#include "arclane/path.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "arclane/errors.hpp"

namespace arclane {

namespace {

struct XYAlpha {
  double x, y, alpha;
};

XYAlpha rhs(const CurvatureProfile& profile, double s, const XYAlpha& v) {
  return {std::cos(v.alpha), std::sin(v.alpha), profile.kappa(s)};
}

XYAlpha rk4_step(const CurvatureProfile& profile, double s, const XYAlpha& v, double h) {
  const XYAlpha k1 = rhs(profile, s, v);
  const XYAlpha k2 = rhs(profile, s + 0.5 * h,
                         {v.x + 0.5 * h * k1.x, v.y + 0.5 * h * k1.y, v.alpha + 0.5 * h * k1.alpha});
  const XYAlpha k3 = rhs(profile, s + 0.5 * h,
                         {v.x + 0.5 * h * k2.x, v.y + 0.5 * h * k2.y, v.alpha + 0.5 * h * k2.alpha});
  const XYAlpha k4 = rhs(profile, s + h, {v.x + h * k3.x, v.y + h * k3.y, v.alpha + h * k3.alpha});
  return {v.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
          v.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
          v.alpha + h / 6.0 * (k1.alpha + 2.0 * k2.alpha + 2.0 * k3.alpha + k4.alpha)};
}

// Four-point Lagrange interpolation on a uniform grid; t is the query
// offset from node i0 in units of h.
double lagrange4(double f0, double f1, double f2, double f3, double t) {
  const double c0 = -(t - 1.0) * (t - 2.0) * (t - 3.0) / 6.0;
  const double c1 = t * (t - 2.0) * (t - 3.0) / 2.0;
  const double c2 = -t * (t - 1.0) * (t - 3.0) / 2.0;
  const double c3 = t * (t - 1.0) * (t - 2.0) / 6.0;
  return c0 * f0 + c1 * f1 + c2 * f2 + c3 * f3;
}

}  // namespace

CurvatureProfile cosine_profile(double kappa_max, double s_period) {
  if (s_period <= 0.0) throw std::invalid_argument("cosine profile requires s_period > 0");
  const double w = 2.0 * std::numbers::pi / s_period;
  const double half = 0.5 * kappa_max;
  CurvatureProfile p;
  p.kappa = [half, w](double s) { return half * (1.0 - std::cos(w * s)); };
  p.dkappa = [half, w](double s) { return half * w * std::sin(w * s); };
  p.d2kappa = [half, w](double s) { return half * w * w * std::cos(w * s); };
  p.d3kappa = [half, w](double s) { return -half * w * w * w * std::sin(w * s); };
  p.name = "cosine";
  p.kappa_max = kappa_max;
  p.s_period = s_period;
  return p;
}

CurvatureProfile constant_profile(double kappa) {
  CurvatureProfile p;
  p.kappa = [kappa](double) { return kappa; };
  p.dkappa = [](double) { return 0.0; };
  p.d2kappa = [](double) { return 0.0; };
  p.d3kappa = [](double) { return 0.0; };
  p.name = "constant";
  p.kappa_max = kappa;
  return p;
}

bool closure_check(double kappa_max, double s_period, int corners) {
  if (corners < 2) throw std::invalid_argument("closure check requires corners >= 2");
  return std::abs(kappa_max * s_period - 4.0 * std::numbers::pi / corners) < 1e-9;
}

PathTable integrate_path(const CurvatureProfile& profile, const PathState& init, double s_end,
                         double h) {
  if (h <= 0.0) throw std::invalid_argument("integration step must be positive");
  if (s_end <= init.s) throw std::invalid_argument("s_end must exceed the initial arc length");

  PathTable table;
  table.h = h;
  table.profile = profile;

  const double span = s_end - init.s;
  const auto full_steps = static_cast<long>(std::floor(span / h + 1e-9));
  table.states.reserve(static_cast<size_t>(full_steps) + 2);

  XYAlpha v{init.x, init.y, init.alpha};
  table.states.push_back(init);
  for (long i = 0; i < full_steps; ++i) {
    const double s = init.s + static_cast<double>(i) * h;
    v = rk4_step(profile, s, v, h);
    table.states.push_back({init.s + static_cast<double>(i + 1) * h, v.x, v.y, v.alpha});
  }
  const double tail = s_end - (init.s + static_cast<double>(full_steps) * h);
  if (tail > 1e-9 * h) {
    v = rk4_step(profile, init.s + static_cast<double>(full_steps) * h, v, tail);
    table.states.push_back({s_end, v.x, v.y, v.alpha});
  }
  return table;
}

void mark_closed(PathTable& table) {
  table.closed = true;
  table.perimeter = table.s_back() - table.s_front();
  const double turn = table.states.back().alpha - table.states.front().alpha;
  table.winding = 2.0 * std::numbers::pi * std::round(turn / (2.0 * std::numbers::pi));
}

PathState state_at(const PathTable& table, double s) {
  const size_t size = table.states.size();
  if (size < 4) throw std::invalid_argument("path table too short for cubic interpolation");

  const double s0 = table.s_front();
  double query = s;
  double alpha_offset = 0.0;
  if (table.closed) {
    const double rel = s - s0;
    double laps = std::floor(rel / table.perimeter);
    query = s0 + (rel - laps * table.perimeter);
    alpha_offset = laps * table.winding;
  } else if (s < s0 - 1e-9 || s > table.s_back() + 1e-9) {
    throw std::invalid_argument("arc length outside the path table range");
  }

  // Number of rows on the exact h-grid (a trailing partial row is excluded
  // from stencil indexing but still reachable by mild extrapolation).
  size_t uniform = size;
  const double last_gap = table.states[size - 1].s - table.states[size - 2].s;
  if (last_gap < table.h * (1.0 - 1e-6)) uniform = size - 1;

  const double u = (query - s0) / table.h;
  long i = static_cast<long>(std::floor(u));
  // stencil [i-1 .. i+2], clamped to the uniform grid
  long lo = i - 1;
  lo = std::max<long>(0, std::min<long>(lo, static_cast<long>(uniform) - 4));
  const double t = u - static_cast<double>(lo);

  const PathState& a = table.states[static_cast<size_t>(lo)];
  const PathState& b = table.states[static_cast<size_t>(lo + 1)];
  const PathState& c = table.states[static_cast<size_t>(lo + 2)];
  const PathState& d = table.states[static_cast<size_t>(lo + 3)];

  PathState out;
  out.s = s;
  out.x = lagrange4(a.x, b.x, c.x, d.x, t);
  out.y = lagrange4(a.y, b.y, c.y, d.y, t);
  // alpha from the integrator is continuous, so plain interpolation is safe
  out.alpha = lagrange4(a.alpha, b.alpha, c.alpha, d.alpha, t) + alpha_offset;
  return out;
}

ParametricRepr param_repr_at(const CurvatureProfile& profile, const PathState& state) {
  const double ca = std::cos(state.alpha);
  const double sa = std::sin(state.alpha);
  const double k = profile.kappa(state.s);
  const double k1 = profile.dkappa(state.s);
  const double k2 = profile.d2kappa(state.s);
  const double k3 = profile.d3kappa(state.s);

  ParametricRepr out;
  out.s0 = state.s;
  out.arclength_normalized = true;
  out.xcoeffs = {state.x,
                 ca,
                 -0.5 * k * sa,
                 -(k * k * ca + k1 * sa) / 6.0,
                 -(k2 - k * k * k) * sa / 24.0 - k * k1 * ca / 8.0,
                 (k * k * k * k - 3.0 * k1 * k1 - 4.0 * k * k2) * ca / 120.0 +
                     (6.0 * k * k * k1 - k3) * sa / 120.0};
  out.ycoeffs = {state.y,
                 sa,
                 0.5 * k * ca,
                 -(k * k * sa - k1 * ca) / 6.0,
                 (k2 - k * k * k) * ca / 24.0 - k * k1 * sa / 8.0,
                 (k * k * k * k - 3.0 * k1 * k1 - 4.0 * k * k2) * sa / 120.0 -
                     (6.0 * k * k * k1 - k3) * ca / 120.0};
  return out;
}

FunctionRepr func_repr_at(const CurvatureProfile& profile, const PathState& state) {
  const double ca = std::cos(state.alpha);
  if (std::abs(ca) < 1e-6)
    throw VerticalTangentError("path slope is vertical: |cos(alpha)| = " +
                               std::to_string(std::abs(ca)));
  const double ta = std::tan(state.alpha);
  const double k = profile.kappa(state.s);
  const double k1 = profile.dkappa(state.s);
  const double k2 = profile.d2kappa(state.s);
  const double k3 = profile.d3kappa(state.s);

  const double c2 = ca * ca;
  const double c3 = c2 * ca;
  const double c4 = c3 * ca;
  const double c5 = c4 * ca;
  const double c6 = c5 * ca;
  const double c7 = c6 * ca;
  const double c8 = c7 * ca;

  FunctionRepr out;
  out.x0 = state.x;
  out.coeffs = {state.y,
                ta,
                k / (2.0 * c3),
                (k1 + 3.0 * k * k * ta) / (6.0 * c4),
                5.0 * k * k * k / (8.0 * c7) + (k2 - 12.0 * k * k * k + 10.0 * k * k1 * ta) / (24.0 * c5),
                7.0 * k * k * (k1 + k * k * ta) / (8.0 * c8) + (k3 - 86.0 * k * k * k1) / (120.0 * c6) +
                    (3.0 * k * k2 + 2.0 * k1 * k1 - 12.0 * k * k * k * k) * ta / (24.0 * c6)};
  return out;
}

void write_path_csv(const PathTable& table, std::ostream& out) {
  out << "s,x,y,alpha,kappa\n";
  char buf[192];
  for (const PathState& st : table.states) {
    std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g,%.10g,%.10g\n", st.s, st.x, st.y, st.alpha,
                  table.profile.kappa(st.s));
    out << buf;
  }
}

}  // namespace arclane
