#include "rpcrank/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace rpcrank {

PcaModel pca_first_component(const NormalizedDataset& data,
                             const OrientationVector& orientation) {
  if (orientation.dim() != data.d())
    throw std::invalid_argument("orientation length does not match attribute count");
  if (data.n() < 2)
    throw std::invalid_argument("a principal component needs at least two rows");

  const Eigen::VectorXd mean = data.values.colwise().mean();
  const Eigen::MatrixXd centered = data.values.rowwise() - mean.transpose();
  const Eigen::MatrixXd covariance =
      centered.transpose() * centered / static_cast<double>(data.n() - 1);

  // Deterministic start vectors: the uniform direction first, then each
  // coordinate axis. The uniform start alone can be orthogonal to the leading
  // eigenvector (exactly anti-correlated attributes), which the covariance
  // then annihilates; the axis fallbacks cover that.
  const Eigen::Index d = data.d();
  std::vector<Eigen::VectorXd> starts;
  starts.push_back(Eigen::VectorXd::Ones(d) / std::sqrt(static_cast<double>(d)));
  for (Eigen::Index j = 0; j < d; ++j) starts.push_back(Eigen::VectorXd::Unit(d, j));

  Eigen::VectorXd direction;
  bool converged = false;
  for (const Eigen::VectorXd& start : starts) {
    direction = start;
    bool annihilated = false;
    for (int iter = 0; iter < 10000; ++iter) {
      Eigen::VectorXd next = covariance * direction;
      const double norm = next.norm();
      if (norm < 1e-300) {
        annihilated = true;
        break;
      }
      next /= norm;
      // The covariance is positive semidefinite, so the iterate cannot flip sign.
      if ((next - direction).norm() < 1e-10) {
        direction = next;
        converged = true;
        break;
      }
      direction = next;
    }
    if (converged) break;
    if (!annihilated)
      throw std::runtime_error("power iteration did not converge in 10000 rounds");
  }
  if (!converged)
    throw std::runtime_error("covariance annihilated every start; no leading component");

  if (orientation.deltas().dot(direction) < 0.0) direction = -direction;
  return PcaModel{mean, direction};
}

Eigen::VectorXd pca_scores(const PcaModel& model, const Eigen::MatrixXd& points) {
  if (points.cols() != model.component.size())
    throw std::invalid_argument("point dimension does not match the component");
  return (points.rowwise() - model.mean.transpose()) * model.component;
}

Eigen::VectorXd median_rank_aggregation(const std::vector<Eigen::VectorXd>& rank_lists) {
  if (rank_lists.empty())
    throw std::invalid_argument("rank aggregation needs at least one list");
  const Eigen::Index n = rank_lists.front().size();
  if (n < 1) throw std::invalid_argument("rank lists must be non-empty");
  Eigen::VectorXd total = Eigen::VectorXd::Zero(n);
  for (const auto& list : rank_lists) {
    if (list.size() != n)
      throw std::invalid_argument("rank lists must share one length");
    total += list;
  }
  return total / static_cast<double>(rank_lists.size());
}

}  // namespace rpcrank
