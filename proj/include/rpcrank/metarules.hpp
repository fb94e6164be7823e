#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rpcrank/bezier.hpp"
#include "rpcrank/dataset.hpp"
#include "rpcrank/fit.hpp"

namespace rpcrank {

struct ScaleTranslationResult {
  bool pass = false;
  int trials = 0;          // transforms actually evaluated
  int invalid_trials = 0;  // rejected transforms (nonpositive scale)
};

struct SmoothnessResult {
  bool pass = false;
  double max_discrepancy = 0.0;  // worst |analytic - finite difference| seen
};

struct CapacityCase {
  std::string shape;
  double explained_variance = 0.0;
  bool pass = false;
};

struct CapacityResult {
  bool pass = false;
  std::vector<CapacityCase> battery;
};

struct MetaRuleReport {
  ScaleTranslationResult scale_translation;
  MonotonicityCheck strict_monotonicity;
  SmoothnessResult smoothness;
  CapacityResult capacity;
  int parameter_size = 0;             // 4 * d
  bool parameter_size_explicit = true;

  bool all_pass() const;
};

/// Refits the data under seeded random positive per-column affine maps and
/// requires the ranking permutation to match the untransformed fit exactly.
ScaleTranslationResult assess_scale_translation(const Dataset& data,
                                                const OrientationVector& orientation,
                                                const FitConfig& cfg,
                                                int trials = 5);

/// Same check against caller-supplied (scale, offset) pairs. Pairs with a
/// nonpositive scale entry reverse attribute order, so they are counted as
/// invalid trials instead of failures.
ScaleTranslationResult assess_scale_translation(
    const Dataset& data,
    const OrientationVector& orientation,
    const FitConfig& cfg,
    const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& transforms);

/// Admissible control points pass outright; otherwise the sampled derivative
/// check at the given grid decides, with a witness on failure.
MonotonicityCheck assess_strict_monotonicity(const ControlPointMatrix& control,
                                             const OrientationVector& orientation,
                                             int grid_size = 1000);

/// Fits noiseless samples from linear, S-shaped, concave and convex curves
/// and requires at least 99% explained variance on each.
CapacityResult assess_capacity(const FitConfig& cfg);

using DerivativeFn =
    std::function<Eigen::VectorXd(const ControlPointMatrix&, double)>;

/// Compares the supplied derivative (the analytic one by default) against
/// central finite differences of the curve on a fine grid; the worst
/// discrepancy must stay within 1e-6.
SmoothnessResult assess_smoothness(const ControlPointMatrix& control,
                                   const DerivativeFn& derivative = {});

/// Runs every assessment against one dataset: fits it, then applies the
/// scale/translation, monotonicity and smoothness checks to that fit plus the
/// synthetic capacity battery.
MetaRuleReport assess_all(const Dataset& data,
                          const OrientationVector& orientation,
                          const FitConfig& cfg);

}  // namespace rpcrank
