#pragma once

#include <Eigen/Dense>

#include "rpcrank/bezier.hpp"

namespace rpcrank {

struct ProjectionConfig {
  int grid_size = 64;            // coarse scan points over [0,1], endpoints included
  double gss_interval_tol = 1e-6;  // golden-section stop on bracket width
};

/// Parameter of the nearest curve point: argmin over s in [0,1] of
/// ||x - f(s)||^2, located by a coarse grid scan followed by golden-section
/// refinement inside the best bracket. Exact ties resolve to the larger s.
/// Deterministic: identical inputs give bitwise-identical results.
double project_point(const ControlPointMatrix& control,
                     const Eigen::VectorXd& x,
                     const ProjectionConfig& cfg = {});

/// project_point applied to each row of points.
Eigen::VectorXd project_all(const ControlPointMatrix& control,
                            const Eigen::MatrixXd& points,
                            const ProjectionConfig& cfg = {});

}  // namespace rpcrank
