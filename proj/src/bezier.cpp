#include "rpcrank/bezier.hpp"

#include <stdexcept>

namespace rpcrank {
namespace {

void require_unit_interval(double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw std::domain_error("curve parameter must lie in [0,1]");
}

void require_shape(const ControlPointMatrix& control) {
  if (control.rows() < 1)
    throw std::invalid_argument("control point matrix must have at least one row");
  if (!control.allFinite())
    throw std::invalid_argument("control points must be finite");
}

}  // namespace

const Eigen::Matrix4d& bernstein_coefficients() {
  static const Eigen::Matrix4d coefficients = [] {
    Eigen::Matrix4d m;
    m << 1.0, -3.0, 3.0, -1.0,
         0.0, 3.0, -6.0, 3.0,
         0.0, 0.0, 3.0, -3.0,
         0.0, 0.0, 0.0, 1.0;
    return m;
  }();
  return coefficients;
}

Eigen::Vector4d bernstein_basis(double s) {
  require_unit_interval(s);
  const double s2 = s * s;
  return bernstein_coefficients() * Eigen::Vector4d(1.0, s, s2, s2 * s);
}

Eigen::VectorXd evaluate_curve(const ControlPointMatrix& control, double s) {
  require_shape(control);
  return control * bernstein_basis(s);
}

Eigen::VectorXd curve_derivative(const ControlPointMatrix& control, double s) {
  require_shape(control);
  require_unit_interval(s);
  const double u = 1.0 - s;
  // Quadratic Bernstein weights on the control point differences.
  const double b0 = u * u;
  const double b1 = 2.0 * s * u;
  const double b2 = s * s;
  return 3.0 * (b0 * (control.col(1) - control.col(0)) +
                b1 * (control.col(2) - control.col(1)) +
                b2 * (control.col(3) - control.col(2)));
}

ControlPointMatrix affine_transform_curve(const ControlPointMatrix& control,
                                          const Eigen::VectorXd& scale,
                                          const Eigen::VectorXd& offset) {
  require_shape(control);
  if (scale.size() != control.rows() || offset.size() != control.rows())
    throw std::invalid_argument("affine map dimensions do not match the curve");
  if (!scale.allFinite() || !offset.allFinite())
    throw std::invalid_argument("affine map must be finite");
  ControlPointMatrix out(control.rows(), 4);
  for (int r = 0; r < 4; ++r)
    out.col(r) = scale.cwiseProduct(control.col(r)) + offset;
  return out;
}

bool check_monotone_admissible(const ControlPointMatrix& control,
                               const OrientationVector& orientation) {
  require_shape(control);
  if (control.rows() != orientation.dim())
    throw std::invalid_argument("control point dimension does not match the orientation");
  const double endpoint_tol = 1e-9;
  const Eigen::VectorXd lo = orientation.low_corner();
  const Eigen::VectorXd hi = orientation.high_corner();
  if (((control.col(0) - lo).cwiseAbs().array() > endpoint_tol).any()) return false;
  if (((control.col(3) - hi).cwiseAbs().array() > endpoint_tol).any()) return false;
  for (int r = 1; r <= 2; ++r) {
    if ((control.col(r).array() <= 0.0).any()) return false;
    if ((control.col(r).array() >= 1.0).any()) return false;
  }
  return true;
}

MonotonicityCheck sample_curve_monotonicity(const ControlPointMatrix& control,
                                            const OrientationVector& orientation,
                                            int grid_size) {
  require_shape(control);
  if (control.rows() != orientation.dim())
    throw std::invalid_argument("control point dimension does not match the orientation");
  if (grid_size < 2)
    throw std::invalid_argument("monotonicity grid needs at least two points");
  for (int k = 0; k < grid_size; ++k) {
    const double s = static_cast<double>(k) / (grid_size - 1);
    const Eigen::VectorXd slope = curve_derivative(control, s);
    for (Eigen::Index j = 0; j < orientation.dim(); ++j) {
      if (!(orientation[j] * slope[j] > 0.0)) return {false, s, j};
    }
  }
  return {true, 0.0, -1};
}

}  // namespace rpcrank
