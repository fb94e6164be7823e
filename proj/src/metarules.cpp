#include "rpcrank/metarules.hpp"

#include <random>
#include <stdexcept>

#include "rpcrank/projection.hpp"

namespace rpcrank {
namespace {

std::vector<int> ranking_permutation(const Dataset& data,
                                     const OrientationVector& orientation,
                                     const FitConfig& cfg) {
  const NormalizedDataset scaled = normalize(data);
  const FitResult result = fit(scaled, orientation, cfg);
  return rank_from_scores(data.object_ids, result.scores).rank_of;
}

bool evaluate_transform(const Dataset& data,
                        const OrientationVector& orientation,
                        const FitConfig& cfg,
                        const std::vector<int>& reference,
                        const Eigen::VectorXd& scale,
                        const Eigen::VectorXd& offset) {
  Eigen::MatrixXd mapped = data.values;
  for (Eigen::Index j = 0; j < data.d(); ++j)
    mapped.col(j) = scale[j] * mapped.col(j).array() + offset[j];
  const Dataset transformed(data.attribute_names, data.object_ids, mapped);
  return ranking_permutation(transformed, orientation, cfg) == reference;
}

ControlPointMatrix shape_control_points(const std::string& shape) {
  ControlPointMatrix control(2, 4);
  control.col(0) << 0.0, 0.0;
  control.col(3) << 1.0, 1.0;
  if (shape == "linear") {
    control.col(1) << 1.0 / 3.0, 1.0 / 3.0;
    control.col(2) << 2.0 / 3.0, 2.0 / 3.0;
  } else if (shape == "s_curve") {
    control.col(1) << 0.4, 0.08;
    control.col(2) << 0.6, 0.92;
  } else if (shape == "concave") {
    control.col(1) << 0.1, 0.55;
    control.col(2) << 0.45, 0.9;
  } else {  // convex
    control.col(1) << 0.55, 0.1;
    control.col(2) << 0.9, 0.45;
  }
  return control;
}

}  // namespace

bool MetaRuleReport::all_pass() const {
  return scale_translation.pass && strict_monotonicity.pass && smoothness.pass &&
         capacity.pass && parameter_size_explicit;
}

ScaleTranslationResult assess_scale_translation(const Dataset& data,
                                                const OrientationVector& orientation,
                                                const FitConfig& cfg,
                                                int trials) {
  if (trials < 1) throw std::invalid_argument("at least one trial is required");
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> scale_draw(0.5, 3.0);
  std::uniform_real_distribution<double> offset_draw(-5.0, 5.0);
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> transforms;
  transforms.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd scale(data.d());
    Eigen::VectorXd offset(data.d());
    for (Eigen::Index j = 0; j < data.d(); ++j) {
      scale[j] = scale_draw(rng);
      offset[j] = offset_draw(rng);
    }
    transforms.emplace_back(std::move(scale), std::move(offset));
  }
  return assess_scale_translation(data, orientation, cfg, transforms);
}

ScaleTranslationResult assess_scale_translation(
    const Dataset& data,
    const OrientationVector& orientation,
    const FitConfig& cfg,
    const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& transforms) {
  const std::vector<int> reference = ranking_permutation(data, orientation, cfg);
  ScaleTranslationResult result;
  result.pass = true;
  for (const auto& [scale, offset] : transforms) {
    if (scale.size() != data.d() || offset.size() != data.d())
      throw std::invalid_argument("transform dimensions do not match the data");
    if ((scale.array() <= 0.0).any()) {
      // A nonpositive scale reverses the attribute's order; the invariance
      // claim does not cover it.
      ++result.invalid_trials;
      continue;
    }
    ++result.trials;
    if (!evaluate_transform(data, orientation, cfg, reference, scale, offset))
      result.pass = false;
  }
  return result;
}

MonotonicityCheck assess_strict_monotonicity(const ControlPointMatrix& control,
                                             const OrientationVector& orientation,
                                             int grid_size) {
  if (check_monotone_admissible(control, orientation)) return {true, 0.0, -1};
  return sample_curve_monotonicity(control, orientation, grid_size);
}

CapacityResult assess_capacity(const FitConfig& cfg) {
  const OrientationVector orientation(Eigen::Vector2d(1.0, 1.0));
  const int n = 150;
  CapacityResult result;
  result.pass = true;
  for (const std::string shape : {"linear", "s_curve", "concave", "convex"}) {
    const ControlPointMatrix truth = shape_control_points(shape);
    Eigen::MatrixXd points(n, 2);
    for (int i = 0; i < n; ++i) {
      const double s = static_cast<double>(i) / (n - 1);
      points.row(i) = evaluate_curve(truth, s).transpose();
    }
    const Dataset data({"x1", "x2"},
                       [n] {
                         std::vector<std::string> ids;
                         for (int i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
                         return ids;
                       }(),
                       points);
    const FitResult fitted = fit(normalize(data), orientation, cfg);
    CapacityCase entry{shape, fitted.report.explained_variance, false};
    entry.pass = entry.explained_variance >= 0.99;
    result.pass = result.pass && entry.pass;
    result.battery.push_back(std::move(entry));
  }
  return result;
}

SmoothnessResult assess_smoothness(const ControlPointMatrix& control,
                                   const DerivativeFn& derivative) {
  const DerivativeFn analytic =
      derivative ? derivative : [](const ControlPointMatrix& c, double s) {
        return curve_derivative(c, s);
      };
  const double h = 1e-5;
  const int grid = 1001;
  SmoothnessResult result;
  for (int k = 0; k < grid; ++k) {
    // Keep s +/- h inside [0,1] so the central difference stays two-sided.
    const double s = h + (1.0 - 2.0 * h) * static_cast<double>(k) / (grid - 1);
    const Eigen::VectorXd numeric =
        (evaluate_curve(control, s + h) - evaluate_curve(control, s - h)) /
        (2.0 * h);
    const double gap = (analytic(control, s) - numeric).cwiseAbs().maxCoeff();
    if (gap > result.max_discrepancy) result.max_discrepancy = gap;
  }
  result.pass = result.max_discrepancy <= 1e-6;
  return result;
}

MetaRuleReport assess_all(const Dataset& data,
                          const OrientationVector& orientation,
                          const FitConfig& cfg) {
  MetaRuleReport report;
  report.scale_translation = assess_scale_translation(data, orientation, cfg);
  const FitResult fitted = fit(normalize(data), orientation, cfg);
  report.strict_monotonicity =
      assess_strict_monotonicity(fitted.control_points, orientation);
  report.smoothness = assess_smoothness(fitted.control_points);
  report.capacity = assess_capacity(cfg);
  report.parameter_size = static_cast<int>(4 * data.d());
  report.parameter_size_explicit = true;
  return report;
}

}  // namespace rpcrank
