#pragma once

#include <stdexcept>
#include <string>

namespace arclane {

// Curve is not locally a function of x (|phibar_1| below the tangent threshold).
struct VerticalTangentError : std::runtime_error {
  explicit VerticalTangentError(const std::string& msg) : std::runtime_error(msg) {}
};

// Degenerate tangent: (x')^2 + (y')^2 vanishes at the evaluation point.
struct SingularCurveError : std::runtime_error {
  explicit SingularCurveError(const std::string& msg) : std::runtime_error(msg) {}
};

// The field-of-view construction broke down (sin(delta - theta) ~ 0 or |theta| >= delta).
struct ObservabilityError : std::runtime_error {
  explicit ObservabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// |d * kappa| >= 1: the feedforward square root is undefined.
struct InfeasibleCurvatureError : std::runtime_error {
  explicit InfeasibleCurvatureError(const std::string& msg) : std::runtime_error(msg) {}
};

// Simulated perception cannot produce a lane polynomial (|theta| >= pi/2).
struct PerceptionError : std::runtime_error {
  explicit PerceptionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace arclane
