#pragma once

#include <vector>

#include <Eigen/Dense>

#include "rpcrank/dataset.hpp"

namespace rpcrank {

struct PcaModel {
  Eigen::VectorXd mean;
  Eigen::VectorXd component;  // unit length, oriented so the orientation-weighted sum is nonnegative
};

/// Leading principal component of the normalized data by power iteration on
/// the sample covariance (deterministic start, direction tolerance 1e-10).
PcaModel pca_first_component(const NormalizedDataset& data,
                             const OrientationVector& orientation);

/// Centered projections (x - mean) . component, one per row of points.
Eigen::VectorXd pca_scores(const PcaModel& model, const Eigen::MatrixXd& points);

/// Mean of the per-attribute ranks for each object. With the conventions of
/// attribute_rank_lists, larger aggregate rank means more preferred.
Eigen::VectorXd median_rank_aggregation(const std::vector<Eigen::VectorXd>& rank_lists);

}  // namespace rpcrank
