#include "rpcrank/fit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace rpcrank {
namespace {

double off_diagonal_norm(const Eigen::Matrix4d& a) {
  double sum = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) sum += a(p, q) * a(p, q);
  return std::sqrt(2.0 * sum);
}

Eigen::MatrixXd center_rows(const Eigen::MatrixXd& points) {
  return points.rowwise() - points.colwise().mean();
}

}  // namespace

Eigen::Matrix4Xd score_power_matrix(const ScoreVector& scores) {
  if (scores.size() < 1)
    throw std::invalid_argument("score vector must be non-empty");
  if (!scores.allFinite() || (scores.array() < 0.0).any() ||
      (scores.array() > 1.0).any())
    throw std::invalid_argument("scores must lie in [0,1]");
  Eigen::Matrix4Xd powers(4, scores.size());
  powers.row(0).setOnes();
  powers.row(1) = scores.transpose();
  powers.row(2) = scores.array().square().transpose();
  powers.row(3) = (scores.array().square() * scores.array()).transpose();
  return powers;
}

double objective_j(const ControlPointMatrix& control,
                   const Eigen::MatrixXd& points,
                   const ScoreVector& scores) {
  if (points.cols() != control.rows())
    throw std::invalid_argument("point dimension does not match the curve");
  if (scores.size() != points.rows())
    throw std::invalid_argument("one score per data row is required");
  const Eigen::Matrix4Xd basis =
      bernstein_coefficients() * score_power_matrix(scores);
  return (points.transpose() - control * basis).squaredNorm();
}

Eigen::Vector4d jacobi_eigenvalues(const Eigen::Matrix4d& sym) {
  if ((sym - sym.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("matrix is not symmetric");
  Eigen::Matrix4d a = 0.5 * (sym + sym.transpose());
  for (int sweep = 0; sweep < 64 && off_diagonal_norm(a) >= 1e-12; ++sweep) {
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double sign = theta >= 0.0 ? 1.0 : -1.0;
        const double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Eigen::Matrix4d rot = Eigen::Matrix4d::Identity();
        rot(p, p) = c;
        rot(q, q) = c;
        rot(p, q) = s;
        rot(q, p) = -s;
        a = rot.transpose() * a * rot;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  Eigen::Vector4d eigenvalues = a.diagonal();
  std::sort(eigenvalues.data(), eigenvalues.data() + 4);
  return eigenvalues;
}

Eigen::Matrix4d preconditioner(const Eigen::Matrix4d& gram) {
  Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
  for (int j = 0; j < 4; ++j) {
    const double norm = gram.col(j).norm();
    if (norm == 0.0)
      throw std::invalid_argument(
          "gram matrix has a zero column; the preconditioner is undefined");
    d(j, j) = norm;
  }
  return d;
}

double step_size(const Eigen::Matrix4d& gram) {
  const Eigen::Vector4d eigenvalues = jacobi_eigenvalues(gram);
  const double spread = eigenvalues(0) + eigenvalues(3);
  if (!(spread > 0.0))
    throw std::invalid_argument("degenerate spectrum: lambda_min + lambda_max <= 0");
  return 2.0 / spread;
}

ControlPointMatrix richardson_step(const ControlPointMatrix& control,
                                   const Eigen::MatrixXd& points,
                                   const Eigen::Matrix4Xd& powers,
                                   const StepOptions& options) {
  if (points.cols() != control.rows())
    throw std::invalid_argument("point dimension does not match the curve");
  if (powers.cols() != points.rows())
    throw std::invalid_argument("one power column per data row is required");
  if (options.fixed_endpoints &&
      options.fixed_endpoints->dim() != control.rows())
    throw std::invalid_argument("endpoint orientation does not match the curve");

  const Eigen::Matrix4Xd basis = bernstein_coefficients() * powers;
  const Eigen::Matrix4d gram = basis * basis.transpose();
  const double gamma = step_size(gram);
  const Eigen::Matrix4d dinv = preconditioner(gram).diagonal().cwiseInverse().asDiagonal();

  const Eigen::MatrixXd gradient =
      control * gram - points.transpose() * basis.transpose();
  ControlPointMatrix next = control - gamma * gradient * dinv;

  if (options.clamp) {
    const double lo = options.clamp_margin;
    const double hi = 1.0 - options.clamp_margin;
    for (int r = 1; r <= 2; ++r)
      next.col(r) = next.col(r).cwiseMax(lo).cwiseMin(hi);
  }
  if (options.fixed_endpoints) {
    next.col(0) = options.fixed_endpoints->low_corner();
    next.col(3) = options.fixed_endpoints->high_corner();
  }
  return next;
}

ControlPointMatrix least_squares_oracle(const Eigen::MatrixXd& points,
                                        const Eigen::Matrix4Xd& powers) {
  if (powers.cols() != points.rows())
    throw std::invalid_argument("one power column per data row is required");
  const Eigen::MatrixXd basis = bernstein_coefficients() * powers;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(basis);
  return points.transpose() * cod.pseudoInverse();
}

FitResult fit(const NormalizedDataset& data,
              const OrientationVector& orientation,
              const FitConfig& cfg) {
  if (orientation.dim() != data.d())
    throw std::invalid_argument("orientation length does not match attribute count");
  if (cfg.max_iter < 1)
    throw std::invalid_argument("max_iter must be at least 1");
  if (!(cfg.xi > 0.0))
    throw std::invalid_argument("xi must be positive");
  if (cfg.clamp && !(cfg.clamp_margin > 0.0 && cfg.clamp_margin < 0.5))
    throw std::invalid_argument("clamp margin must lie in (0, 0.5)");

  const Eigen::MatrixXd& points = data.values;
  const Eigen::Index n = data.n();
  const Eigen::Index d = data.d();

  // Endpoints start on the orientation corners; the interior control points
  // start on two data rows ordered along the orientation.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
  const Eigen::Index i1 = pick(rng);
  const Eigen::Index i2 = pick(rng);
  Eigen::VectorXd inner1 = points.row(i1).transpose();
  Eigen::VectorXd inner2 = points.row(i2).transpose();
  if (orientation.deltas().dot(inner1) > orientation.deltas().dot(inner2))
    inner1.swap(inner2);

  ControlPointMatrix control(d, 4);
  control.col(0) = orientation.low_corner();
  control.col(1) = inner1;
  control.col(2) = inner2;
  control.col(3) = orientation.high_corner();

  StepOptions step_options;
  step_options.clamp = cfg.clamp;
  step_options.clamp_margin = cfg.clamp_margin;
  if (cfg.endpoints == EndpointPolicy::Fixed)
    step_options.fixed_endpoints = orientation;

  const auto project_scores = [&](const ControlPointMatrix& current) {
    Eigen::VectorXd scores = project_all(current, points, cfg.projection);
    if (n > 1 && (scores.array() == scores[0]).all())
      throw std::runtime_error(
          "all objects project to the same parameter; degenerate fit "
          "(try a different seed)");
    return scores;
  };

  ScoreVector scores = project_scores(control);
  double j_current = objective_j(control, points, scores);

  FitReport report;
  report.j_trajectory.push_back(j_current);

  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    const ControlPointMatrix candidate = richardson_step(
        control, points, score_power_matrix(scores), step_options);
    const ScoreVector candidate_scores = project_scores(candidate);
    const double j_candidate = objective_j(candidate, points, candidate_scores);
    const double decrease = j_current - j_candidate;
    if (decrease < 0.0) {
      report.stopped_on_increase = true;  // keep the minimum-J iterate
      break;
    }
    control = candidate;
    scores = candidate_scores;
    j_current = j_candidate;
    report.j_trajectory.push_back(j_current);
    report.iterations = iter;
    if (decrease / std::max(j_current, 1e-12) < cfg.xi) {
      report.converged = true;
      break;
    }
  }

  const double total_variance = center_rows(points).squaredNorm();
  report.explained_variance = 1.0 - j_current / std::max(total_variance, 1e-12);
  if (check_monotone_admissible(control, orientation)) {
    report.monotone = {true, 0.0, -1};
  } else {
    report.monotone = sample_curve_monotonicity(control, orientation, 1000);
  }
  const Eigen::Matrix4Xd basis =
      bernstein_coefficients() * score_power_matrix(scores);
  report.residual_norms =
      (points.transpose() - control * basis).colwise().norm().transpose();
  report.P_normalized = control;
  report.P_original = affine_transform_curve(
      control, data.col_max - data.col_min, data.col_min);

  return FitResult{control, scores, std::move(report)};
}

RankingList rank_from_scores(const std::vector<std::string>& ids,
                             const Eigen::VectorXd& scores) {
  if (static_cast<Eigen::Index>(ids.size()) != scores.size())
    throw std::invalid_argument("one id per score is required");
  if (scores.size() < 1) throw std::invalid_argument("scores must be non-empty");
  if (!scores.allFinite()) throw std::invalid_argument("scores must be finite");

  std::vector<Eigen::Index> order(ids.size());
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&scores](Eigen::Index a, Eigen::Index b) {
                     return scores[a] > scores[b];
                   });

  RankingList ranking;
  ranking.items.reserve(ids.size());
  ranking.rank_of.assign(ids.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const Eigen::Index i = order[pos];
    const int rank = static_cast<int>(pos) + 1;
    ranking.items.push_back({ids[static_cast<std::size_t>(i)], scores[i], rank});
    ranking.rank_of[static_cast<std::size_t>(i)] = rank;
  }
  return ranking;
}

}  // namespace rpcrank
