#include "arclane/curve.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "arclane/errors.hpp"

namespace arclane {

namespace {

// Horner evaluation of the k-th derivative of sum c_n u^n at u.
double horner_derivative(const std::vector<double>& c, double u, int k) {
  const int n = static_cast<int>(c.size()) - 1;
  if (k > n) return 0.0;
  double acc = 0.0;
  for (int i = n; i >= k; --i) {
    // falling factorial i! / (i-k)!
    double f = 1.0;
    for (int j = 0; j < k; ++j) f *= static_cast<double>(i - j);
    acc = acc * u + f * c[static_cast<size_t>(i)];
  }
  return acc;
}

std::vector<double> pad_to(const std::vector<double>& c, size_t n) {
  std::vector<double> out(n, 0.0);
  for (size_t i = 0; i < c.size() && i < n; ++i) out[i] = c[i];
  return out;
}

std::string format_row(const std::vector<double>& row) {
  std::string out;
  char buf[40];
  for (size_t i = 0; i < row.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
    if (i) out += ' ';
    out += buf;
  }
  return out;
}

std::vector<double> parse_row(std::istringstream& in, int count) {
  std::vector<double> row;
  row.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    double v;
    if (!(in >> v)) throw std::invalid_argument("truncated coefficient row");
    row.push_back(v);
  }
  return row;
}

}  // namespace

std::vector<double> ShiftMatrix::apply(const std::vector<double>& row) const {
  if (static_cast<int>(row.size()) != dim)
    throw std::invalid_argument("coefficient row size does not match shift matrix");
  std::vector<double> out(row.size(), 0.0);
  for (int m = 0; m < dim; ++m) {
    double acc = 0.0;
    for (int n = m; n < dim; ++n) acc += at(m, n) * row[static_cast<size_t>(n)];
    out[static_cast<size_t>(m)] = acc;
  }
  return out;
}

double eval_function(const FunctionRepr& repr, double x) {
  return horner_derivative(repr.coeffs, x - repr.x0, 0);
}

ParametricJet eval_parametric(const ParametricRepr& repr, double s, int deriv_order) {
  if (deriv_order < 0 || deriv_order > repr.order())
    throw std::invalid_argument("derivative order exceeds representation order");
  ParametricJet jet;
  const double u = s - repr.s0;
  for (int k = 0; k <= deriv_order; ++k) {
    jet.x.push_back(horner_derivative(repr.xcoeffs, u, k));
    jet.y.push_back(horner_derivative(repr.ycoeffs, u, k));
  }
  return jet;
}

ShiftMatrix shift_matrix(double s_tilde, int order) {
  if (order < 0) throw std::invalid_argument("shift matrix order must be >= 0");
  const int dim = order + 1;
  ShiftMatrix t;
  t.dim = dim;
  t.s_tilde = s_tilde;
  t.entries.assign(static_cast<size_t>(dim) * dim, 0.0);

  // Pascal recurrence for the binomial coefficients C(n, m).
  std::vector<double> binom(static_cast<size_t>(dim) * dim, 0.0);
  for (int n = 0; n < dim; ++n) {
    binom[static_cast<size_t>(n) * dim] = 1.0;
    for (int m = 1; m <= n; ++m)
      binom[static_cast<size_t>(n) * dim + m] =
          binom[static_cast<size_t>(n - 1) * dim + m - 1] +
          binom[static_cast<size_t>(n - 1) * dim + m];
  }

  for (int m = 0; m < dim; ++m) {
    double p = 1.0;  // s_tilde^(n-m)
    for (int n = m; n < dim; ++n) {
      t.entries[static_cast<size_t>(m) * dim + n] = binom[static_cast<size_t>(n) * dim + m] * p;
      p *= s_tilde;
    }
  }
  return t;
}

ParametricRepr shift_parametric(const ParametricRepr& repr, double s_tilde) {
  const ShiftMatrix t = shift_matrix(s_tilde, repr.order());
  ParametricRepr out = repr;
  out.s0 = repr.s0 + s_tilde;
  out.xcoeffs = t.apply(repr.xcoeffs);
  out.ycoeffs = t.apply(repr.ycoeffs);
  return out;
}

FunctionRepr shift_function(const FunctionRepr& repr, double x_tilde) {
  const ShiftMatrix t = shift_matrix(x_tilde, repr.order());
  FunctionRepr out = repr;
  out.x0 = repr.x0 + x_tilde;
  out.coeffs = t.apply(repr.coeffs);
  return out;
}

ParametricRepr transform_parametric(const ParametricRepr& repr, const RigidMotion2D& motion) {
  const double c = std::cos(motion.psi);
  const double sn = std::sin(motion.psi);
  ParametricRepr out = repr;
  for (size_t n = 0; n < repr.xcoeffs.size(); ++n) {
    const double x = repr.xcoeffs[n] - (n == 0 ? motion.dx : 0.0);
    const double y = repr.ycoeffs[n] - (n == 0 ? motion.dy : 0.0);
    out.xcoeffs[n] = c * x + sn * y;   // R^T rows
    out.ycoeffs[n] = -sn * x + c * y;
  }
  return out;
}

ParametricRepr func_to_param(const FunctionRepr& repr) {
  if (repr.order() > 5)
    throw std::invalid_argument("function-to-parametric map is only available up to order 5");
  const std::vector<double> p = pad_to(repr.coeffs, 6);
  const double p1 = p[1], p2 = p[2], p3 = p[3], p4 = p[4], p5 = p[5];

  const double l2 = 1.0 + p1 * p1;
  const double l = std::sqrt(l2);  // lambda >= 1
  const double l4 = l2 * l2;
  const double l5 = l4 * l;
  const double l6 = l4 * l2;
  const double l7 = l6 * l;
  const double l8 = l6 * l2;
  const double l9 = l8 * l;
  const double l10 = l8 * l2;
  const double l11 = l10 * l;
  const double l13 = l11 * l2;

  ParametricRepr out;
  out.s0 = 0.0;
  out.arclength_normalized = true;
  out.xcoeffs.resize(6);
  out.ycoeffs.resize(6);
  std::vector<double>& b = out.xcoeffs;
  std::vector<double>& h = out.ycoeffs;

  b[0] = 0.0;
  h[0] = p[0];
  b[1] = 1.0 / l;
  h[1] = p1 / l;
  b[2] = -p1 * p2 / l4;
  h[2] = p2 / l4;
  b[3] = (2.0 * p2 * p2 - p1 * p3) / l5 - 8.0 * p2 * p2 / (3.0 * l7);
  h[3] = p3 / l5 - 8.0 * p1 * p2 * p2 / (3.0 * l7);
  b[4] = (5.0 * p2 * p3 - p1 * p4) / l6 -
         (10.0 * p1 * p2 * p2 * p2 + 13.0 * p2 * p3) / (2.0 * l8) +
         28.0 * p1 * p2 * p2 * p2 / (3.0 * l10);
  h[4] = p4 / l6 + (16.0 * p2 * p2 * p2 - 13.0 * p1 * p2 * p3) / (2.0 * l8) -
         28.0 * p2 * p2 * p2 / (3.0 * l10);
  b[5] = (3.0 * p3 * p3 + 6.0 * p2 * p4 - p1 * p5) / l7 -
         (39.0 * p3 * p3 + 210.0 * p1 * p2 * p2 * p3 + 76.0 * p2 * p4 -
          140.0 * p2 * p2 * p2 * p2) / (10.0 * l9) +
         (188.0 * p1 * p2 * p2 * p3 - 248.0 * p2 * p2 * p2 * p2) / (5.0 * l11) +
         112.0 * p2 * p2 * p2 * p2 / (3.0 * l13);
  h[5] = p5 / l7 +
         (326.0 * p2 * p2 * p3 - 76.0 * p1 * p2 * p4 - 39.0 * p1 * p3 * p3) / (10.0 * l9) -
         (128.0 * p1 * p2 * p2 * p2 * p2 + 188.0 * p2 * p2 * p3) / (5.0 * l11) +
         112.0 * p1 * p2 * p2 * p2 * p2 / (3.0 * l13);
  return out;
}

FunctionRepr param_to_func(const ParametricRepr& repr, double tangent_threshold) {
  if (repr.order() > 5)
    throw std::invalid_argument("parametric-to-function map is only available up to order 5");
  const std::vector<double> b = pad_to(repr.xcoeffs, 6);
  const std::vector<double> h = pad_to(repr.ycoeffs, 6);
  const double b1 = b[1];
  if (std::abs(b1) < tangent_threshold)
    throw VerticalTangentError("curve is not locally a function of x: |phibar_1| = " +
                               std::to_string(std::abs(b1)));
  const double b2 = b[2], b3 = b[3], b4 = b[4], b5 = b[5];
  const double h1 = h[1], h2 = h[2], h3 = h[3], h4 = h[4], h5 = h[5];

  const double b1_2 = b1 * b1;
  const double b1_3 = b1_2 * b1;
  const double b1_4 = b1_3 * b1;
  const double b1_5 = b1_4 * b1;
  const double b1_6 = b1_5 * b1;
  const double b1_7 = b1_6 * b1;
  const double b1_8 = b1_7 * b1;
  const double b1_9 = b1_8 * b1;

  FunctionRepr out;
  out.x0 = b[0];
  out.coeffs.resize(6);
  std::vector<double>& q = out.coeffs;
  q[0] = h[0];
  q[1] = h1 / b1;
  q[2] = (h2 * b1 - h1 * b2) / b1_3;
  q[3] = h3 / b1_3 - (h1 * b3 + 2.0 * h2 * b2) / b1_4 + 2.0 * h1 * b2 * b2 / b1_5;
  q[4] = h4 / b1_4 - (h1 * b4 + 2.0 * h2 * b3 + 3.0 * h3 * b2) / b1_5 +
         5.0 * b2 * (h1 * b3 + h2 * b2) / b1_6 - 5.0 * h1 * b2 * b2 * b2 / b1_7;
  q[5] = h5 / b1_5 -
         (h1 * b5 + 2.0 * h2 * b4 + 3.0 * h3 * b3 + 4.0 * h4 * b2) / b1_6 +
         (3.0 * h1 * (b3 * b3 + 2.0 * b2 * b4) + 3.0 * b2 * (3.0 * h3 * b2 + 4.0 * h2 * b3)) / b1_7 -
         7.0 * b2 * b2 * (3.0 * h1 * b3 + 2.0 * h2 * b2) / b1_8 +
         14.0 * h1 * b2 * b2 * b2 * b2 / b1_9;
  return out;
}

PreviewInfo extract_preview(const ParametricRepr& repr, double s_p) {
  const ParametricJet jet = eval_parametric(repr, repr.s0 + s_p, 2);
  const double tp = jet.x[1], ep = jet.y[1];   // tau', eta'
  const double tpp = jet.x[2], epp = jet.y[2];
  const double speed2 = tp * tp + ep * ep;
  if (speed2 < 1e-12)
    throw SingularCurveError("degenerate tangent at preview distance");
  PreviewInfo info;
  info.epsilon = -jet.y[0];
  info.theta = -std::atan2(ep, tp);
  info.kappa = (epp * tp - ep * tpp) / speed2;
  return info;
}

bool check_arclength_normalization(const ParametricRepr& repr, double tol) {
  if (repr.order() < 1) return false;
  const double b1 = repr.xcoeffs[1], h1 = repr.ycoeffs[1];
  const double unit = b1 * b1 + h1 * h1 - 1.0;
  double ortho = 0.0;
  if (repr.order() >= 2) ortho = b1 * repr.xcoeffs[2] + h1 * repr.ycoeffs[2];
  return std::abs(unit) <= tol && std::abs(ortho) <= tol;
}

std::string to_debug_string(const FunctionRepr& repr) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", repr.x0);
  return "function " + std::to_string(repr.order()) + " " + buf + "\n" +
         format_row(repr.coeffs) + "\n";
}

std::string to_debug_string(const ParametricRepr& repr) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", repr.s0);
  return "parametric " + std::to_string(repr.order()) + " " + buf + " " +
         (repr.arclength_normalized ? "1" : "0") + "\n" + format_row(repr.xcoeffs) + "\n" +
         format_row(repr.ycoeffs) + "\n";
}

FunctionRepr function_from_debug_string(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  int order;
  FunctionRepr repr;
  if (!(in >> tag >> order >> repr.x0) || tag != "function")
    throw std::invalid_argument("malformed function representation");
  repr.coeffs = parse_row(in, order + 1);
  return repr;
}

ParametricRepr parametric_from_debug_string(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  int order, flag;
  ParametricRepr repr;
  if (!(in >> tag >> order >> repr.s0 >> flag) || tag != "parametric")
    throw std::invalid_argument("malformed parametric representation");
  repr.arclength_normalized = flag != 0;
  repr.xcoeffs = parse_row(in, order + 1);
  repr.ycoeffs = parse_row(in, order + 1);
  return repr;
}

}  // namespace arclane
