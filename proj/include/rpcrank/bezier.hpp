#pragma once

#include <Eigen/Dense>

#include "rpcrank/dataset.hpp"

namespace rpcrank {

/// Control points of a cubic curve in d dimensions, one column per control
/// point p0..p3.
using ControlPointMatrix = Eigen::Matrix<double, Eigen::Dynamic, 4>;

/// Coefficient matrix taking the power basis (1, s, s^2, s^3) to the cubic
/// Bernstein basis.
const Eigen::Matrix4d& bernstein_coefficients();

/// Cubic Bernstein basis at s. Requires s in [0,1]; components are
/// nonnegative and sum to 1 up to rounding.
Eigen::Vector4d bernstein_basis(double s);

/// Curve point f(s) = P * bernstein_basis(s).
Eigen::VectorXd evaluate_curve(const ControlPointMatrix& control, double s);

/// Analytic derivative f'(s), a quadratic in the differences of consecutive
/// control points.
Eigen::VectorXd curve_derivative(const ControlPointMatrix& control, double s);

/// Applies x -> scale .* x + offset to every control point. Affine maps act
/// on a Bezier curve through its control points, so this transforms the whole
/// curve.
ControlPointMatrix affine_transform_curve(const ControlPointMatrix& control,
                                          const Eigen::VectorXd& scale,
                                          const Eigen::VectorXd& offset);

/// Sufficient condition for strict componentwise monotonicity: endpoints sit
/// on the orientation's corners (within 1e-9) and both interior control
/// points lie strictly inside the open unit hypercube.
bool check_monotone_admissible(const ControlPointMatrix& control,
                               const OrientationVector& orientation);

struct MonotonicityCheck {
  bool pass = false;
  double witness_s = 0.0;        // first violating parameter, when !pass
  Eigen::Index witness_axis = -1;  // attribute of the violation, when !pass
};

/// Checks delta_j * f_j'(s) > 0 on an equispaced grid including both
/// endpoints. Necessary-style evidence for curves that fail the admissible
/// test; returns the first violation found.
MonotonicityCheck sample_curve_monotonicity(const ControlPointMatrix& control,
                                            const OrientationVector& orientation,
                                            int grid_size);

}  // namespace rpcrank
