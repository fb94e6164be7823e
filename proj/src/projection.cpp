#include "rpcrank/projection.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace rpcrank {
namespace {

struct BestPoint {
  double g = 0.0;
  double s = -1.0;

  // Ties resolve to the larger parameter, matching the supremum convention
  // for projection indices.
  void offer(double g_val, double s_val) {
    if (s < 0.0 || g_val < g || (g_val == g && s_val > s)) {
      g = g_val;
      s = s_val;
    }
  }
};

}  // namespace

double project_point(const ControlPointMatrix& control,
                     const Eigen::VectorXd& x,
                     const ProjectionConfig& cfg) {
  if (x.size() != control.rows())
    throw std::invalid_argument("point dimension does not match the curve");
  if (!x.allFinite()) throw std::invalid_argument("projected point must be finite");
  if (cfg.grid_size < 2)
    throw std::invalid_argument("projection grid needs at least two points");
  if (!(cfg.gss_interval_tol > 0.0))
    throw std::invalid_argument("golden-section tolerance must be positive");

  const auto g = [&](double s) {
    return (x - evaluate_curve(control, s)).squaredNorm();
  };

  // The squared distance is degree six in s; a coarse scan locates the global
  // basin before local refinement.
  BestPoint best;
  int best_index = 0;
  for (int k = 0; k < cfg.grid_size; ++k) {
    const double s = static_cast<double>(k) / (cfg.grid_size - 1);
    const double value = g(s);
    if (k == 0 || value < best.g || (value == best.g && s > best.s)) best_index = k;
    best.offer(value, s);
  }

  double a = static_cast<double>(std::max(best_index - 1, 0)) / (cfg.grid_size - 1);
  double b = static_cast<double>(std::min(best_index + 1, cfg.grid_size - 1)) /
             (cfg.grid_size - 1);

  const double invphi = 1.0 / std::numbers::phi;
  double c = std::clamp(b - invphi * (b - a), a, b);
  double d = std::clamp(a + invphi * (b - a), a, b);
  double gc = g(c);
  double gd = g(d);
  best.offer(gc, c);
  best.offer(gd, d);
  for (int round = 0; round < 200 && (b - a) > cfg.gss_interval_tol; ++round) {
    if (gc < gd) {
      b = d;
      d = c;
      gd = gc;
      c = std::clamp(b - invphi * (b - a), a, b);
      gc = g(c);
      best.offer(gc, c);
    } else {
      // Equal interior values also move right, keeping the larger-s rule.
      a = c;
      c = d;
      gc = gd;
      d = std::clamp(a + invphi * (b - a), a, b);
      gd = g(d);
      best.offer(gd, d);
    }
  }
  return best.s;
}

Eigen::VectorXd project_all(const ControlPointMatrix& control,
                            const Eigen::MatrixXd& points,
                            const ProjectionConfig& cfg) {
  if (points.cols() != control.rows())
    throw std::invalid_argument("point dimension does not match the curve");
  Eigen::VectorXd scores(points.rows());
  for (Eigen::Index i = 0; i < points.rows(); ++i)
    scores[i] = project_point(control, points.row(i).transpose(), cfg);
  return scores;
}

}  // namespace rpcrank
