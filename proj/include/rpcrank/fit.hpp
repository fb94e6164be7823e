#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rpcrank/bezier.hpp"
#include "rpcrank/dataset.hpp"
#include "rpcrank/projection.hpp"

namespace rpcrank {

/// Projection parameters of the fitted objects, one per row of the data,
/// each in [0,1]. Larger means more preferred.
using ScoreVector = Eigen::VectorXd;

/// Power matrix of the scores: column i is (1, s_i, s_i^2, s_i^3).
Eigen::Matrix4Xd score_power_matrix(const ScoreVector& scores);

/// Sum of squared distances from each data row to its assigned curve point.
double objective_j(const ControlPointMatrix& control,
                   const Eigen::MatrixXd& points,
                   const ScoreVector& scores);

/// Eigenvalues of a symmetric 4x4 matrix, ascending, by cyclic Jacobi
/// rotation sweeps run until the off-diagonal Frobenius norm is below 1e-12.
Eigen::Vector4d jacobi_eigenvalues(const Eigen::Matrix4d& sym);

/// Diagonal preconditioner: D_jj is the Euclidean norm of column j of the
/// gram matrix. A zero column is an error.
Eigen::Matrix4d preconditioner(const Eigen::Matrix4d& gram);

/// Richardson relaxation step size 2 / (lambda_min + lambda_max) of the gram
/// matrix. Degenerate spectra (sum <= 0) are errors.
double step_size(const Eigen::Matrix4d& gram);

enum class EndpointPolicy { Free, Fixed };

struct StepOptions {
  bool clamp = false;            // project interior control points into the margin box
  double clamp_margin = 1e-6;
  std::optional<OrientationVector> fixed_endpoints;  // pin p0/p3 to the orientation corners
};

/// One preconditioned Richardson update of the control points against fixed
/// scores: P - gamma * (P*A - X^T*(MZ)^T) * D^{-1} with A the gram matrix of
/// the Bernstein-mapped powers. points is n x d (rows are objects).
ControlPointMatrix richardson_step(const ControlPointMatrix& control,
                                   const Eigen::MatrixXd& points,
                                   const Eigen::Matrix4Xd& powers,
                                   const StepOptions& options = {});

/// Direct least-squares solution of min ||X^T - P*(M*Z)||_F via the
/// Moore-Penrose pseudo-inverse; minimum Frobenius norm among minimizers.
/// Deliberately independent of the Richardson path so it can check it.
ControlPointMatrix least_squares_oracle(const Eigen::MatrixXd& points,
                                        const Eigen::Matrix4Xd& powers);

struct FitConfig {
  double xi = 1e-6;      // stop when the relative objective decrease falls below this
  int max_iter = 500;
  EndpointPolicy endpoints = EndpointPolicy::Free;
  bool clamp = false;
  double clamp_margin = 1e-6;
  std::uint64_t seed = 1;  // seeds the choice of initial interior control points
  ProjectionConfig projection{};
};

struct FitReport {
  std::vector<double> j_trajectory;  // accepted objective values, non-increasing
  int iterations = 0;                // accepted Richardson steps
  bool converged = false;            // relative decrease fell below xi
  bool stopped_on_increase = false;  // a step raised the objective; previous iterate kept
  double explained_variance = 0.0;   // 1 - J / total variance, in (-inf, 1]
  MonotonicityCheck monotone;
  Eigen::VectorXd residual_norms;    // per-object distance to the fitted curve
  ControlPointMatrix P_normalized;
  ControlPointMatrix P_original;     // control points mapped back to raw units
};

struct FitResult {
  ControlPointMatrix control_points;  // normalized space; same as report.P_normalized
  ScoreVector scores;
  FitReport report;
};

/// Alternating minimization: project the data onto the current curve, then
/// relax the control points against the projections, until the objective
/// decrease stalls, reverses, or max_iter is reached. When a step raises the
/// objective the previous iterate is reported, so the result attains the
/// minimum trajectory value. Seeded and deterministic: identical inputs and
/// config reproduce the result bitwise.
FitResult fit(const NormalizedDataset& data,
              const OrientationVector& orientation,
              const FitConfig& cfg = {});

struct RankedItem {
  std::string id;
  double score;
  int rank;
};

struct RankingList {
  std::vector<RankedItem> items;  // rank 1 (highest score) first
  std::vector<int> rank_of;       // rank per input index
};

/// Dense ranks by descending score; exact score ties break by input order.
RankingList rank_from_scores(const std::vector<std::string>& ids,
                             const Eigen::VectorXd& scores);

}  // namespace rpcrank
