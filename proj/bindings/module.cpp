#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rpcrank/baselines.hpp"
#include "rpcrank/bezier.hpp"
#include "rpcrank/dataset.hpp"
#include "rpcrank/fit.hpp"
#include "rpcrank/io.hpp"
#include "rpcrank/metarules.hpp"
#include "rpcrank/projection.hpp"

namespace py = pybind11;
using namespace rpcrank;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Monotone-curve ranking of multi-attribute objects";

  py::class_<OrientationVector>(m, "OrientationVector")
      .def(py::init<Eigen::VectorXd>(), py::arg("deltas"))
      .def_static("parse", &OrientationVector::parse, py::arg("text"))
      .def_property_readonly("deltas", &OrientationVector::deltas)
      .def_property_readonly("dim", &OrientationVector::dim)
      .def("low_corner", &OrientationVector::low_corner)
      .def("high_corner", &OrientationVector::high_corner);

  py::class_<Dataset>(m, "Dataset")
      .def(py::init<std::vector<std::string>, std::vector<std::string>,
                    Eigen::MatrixXd>(),
           py::arg("attribute_names"), py::arg("object_ids"), py::arg("values"))
      .def_readonly("attribute_names", &Dataset::attribute_names)
      .def_readonly("object_ids", &Dataset::object_ids)
      .def_readonly("values", &Dataset::values);

  py::class_<CsvLoadResult>(m, "CsvLoadResult")
      .def_readonly("dataset", &CsvLoadResult::dataset)
      .def_readonly("dropped_rows", &CsvLoadResult::dropped_rows);

  m.def("load_csv", &load_csv, py::arg("path"),
        py::arg("id_column") = std::optional<std::string>());

  py::class_<NormalizedDataset>(m, "NormalizedDataset")
      .def(py::init<Eigen::MatrixXd, Eigen::VectorXd, Eigen::VectorXd>(),
           py::arg("values"), py::arg("col_min"), py::arg("col_max"))
      .def_readonly("values", &NormalizedDataset::values)
      .def_readonly("col_min", &NormalizedDataset::col_min)
      .def_readonly("col_max", &NormalizedDataset::col_max);

  m.def("normalize", &normalize, py::arg("data"));

  py::enum_<Ordering>(m, "Ordering")
      .value("Precedes", Ordering::Precedes)
      .value("Succeeds", Ordering::Succeeds)
      .value("Equal", Ordering::Equal)
      .value("Incomparable", Ordering::Incomparable);

  m.def("compare_points", &compare_points, py::arg("x"), py::arg("y"),
        py::arg("orientation"));
  m.def("attribute_rank_lists", &attribute_rank_lists, py::arg("data"),
        py::arg("orientation"));

  m.def("bernstein_coefficients",
        [] { return Eigen::Matrix4d(bernstein_coefficients()); });
  m.def("bernstein_basis", &bernstein_basis, py::arg("s"));
  m.def("evaluate_curve", &evaluate_curve, py::arg("control"), py::arg("s"));
  m.def("curve_derivative", &curve_derivative, py::arg("control"), py::arg("s"));
  m.def("affine_transform_curve", &affine_transform_curve, py::arg("control"),
        py::arg("scale"), py::arg("offset"));
  m.def("check_monotone_admissible", &check_monotone_admissible,
        py::arg("control"), py::arg("orientation"));

  py::class_<MonotonicityCheck>(m, "MonotonicityCheck")
      .def_readonly("pass_", &MonotonicityCheck::pass)
      .def_readonly("witness_s", &MonotonicityCheck::witness_s)
      .def_readonly("witness_axis", &MonotonicityCheck::witness_axis);

  m.def("sample_curve_monotonicity", &sample_curve_monotonicity,
        py::arg("control"), py::arg("orientation"), py::arg("grid_size"));

  py::class_<ProjectionConfig>(m, "ProjectionConfig")
      .def(py::init<>())
      .def_readwrite("grid_size", &ProjectionConfig::grid_size)
      .def_readwrite("gss_interval_tol", &ProjectionConfig::gss_interval_tol);

  m.def("project_point", &project_point, py::arg("control"), py::arg("x"),
        py::arg("cfg") = ProjectionConfig{});
  m.def("project_all", &project_all, py::arg("control"), py::arg("points"),
        py::arg("cfg") = ProjectionConfig{});

  m.def("score_power_matrix", &score_power_matrix, py::arg("scores"));
  m.def("objective_j", &objective_j, py::arg("control"), py::arg("points"),
        py::arg("scores"));
  m.def("jacobi_eigenvalues", &jacobi_eigenvalues, py::arg("sym"));
  m.def("preconditioner", &preconditioner, py::arg("gram"));
  m.def("step_size", &step_size, py::arg("gram"));
  m.def("least_squares_oracle", &least_squares_oracle, py::arg("points"),
        py::arg("powers"));

  py::enum_<EndpointPolicy>(m, "EndpointPolicy")
      .value("Free", EndpointPolicy::Free)
      .value("Fixed", EndpointPolicy::Fixed);

  py::class_<StepOptions>(m, "StepOptions")
      .def(py::init<>())
      .def_readwrite("clamp", &StepOptions::clamp)
      .def_readwrite("clamp_margin", &StepOptions::clamp_margin)
      .def_readwrite("fixed_endpoints", &StepOptions::fixed_endpoints);

  m.def("richardson_step", &richardson_step, py::arg("control"), py::arg("points"),
        py::arg("powers"), py::arg("options") = StepOptions{});

  py::class_<FitConfig>(m, "FitConfig")
      .def(py::init<>())
      .def_readwrite("xi", &FitConfig::xi)
      .def_readwrite("max_iter", &FitConfig::max_iter)
      .def_readwrite("endpoints", &FitConfig::endpoints)
      .def_readwrite("clamp", &FitConfig::clamp)
      .def_readwrite("clamp_margin", &FitConfig::clamp_margin)
      .def_readwrite("seed", &FitConfig::seed)
      .def_readwrite("projection", &FitConfig::projection);

  py::class_<FitReport>(m, "FitReport")
      .def_readonly("j_trajectory", &FitReport::j_trajectory)
      .def_readonly("iterations", &FitReport::iterations)
      .def_readonly("converged", &FitReport::converged)
      .def_readonly("stopped_on_increase", &FitReport::stopped_on_increase)
      .def_readonly("explained_variance", &FitReport::explained_variance)
      .def_readonly("monotone", &FitReport::monotone)
      .def_readonly("residual_norms", &FitReport::residual_norms)
      .def_readonly("P_normalized", &FitReport::P_normalized)
      .def_readonly("P_original", &FitReport::P_original);

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("control_points", &FitResult::control_points)
      .def_readonly("scores", &FitResult::scores)
      .def_readonly("report", &FitResult::report);

  m.def("fit", &fit, py::arg("data"), py::arg("orientation"),
        py::arg("cfg") = FitConfig{});

  py::class_<RankedItem>(m, "RankedItem")
      .def_readonly("id", &RankedItem::id)
      .def_readonly("score", &RankedItem::score)
      .def_readonly("rank", &RankedItem::rank);

  py::class_<RankingList>(m, "RankingList")
      .def_readonly("items", &RankingList::items)
      .def_readonly("rank_of", &RankingList::rank_of);

  m.def("rank_from_scores", &rank_from_scores, py::arg("ids"), py::arg("scores"));

  py::class_<PcaModel>(m, "PcaModel")
      .def_readonly("mean", &PcaModel::mean)
      .def_readonly("component", &PcaModel::component);

  m.def("pca_first_component", &pca_first_component, py::arg("data"),
        py::arg("orientation"));
  m.def("pca_scores", &pca_scores, py::arg("model"), py::arg("points"));
  m.def("median_rank_aggregation", &median_rank_aggregation, py::arg("rank_lists"));

  py::class_<ScaleTranslationResult>(m, "ScaleTranslationResult")
      .def_readonly("pass_", &ScaleTranslationResult::pass)
      .def_readonly("trials", &ScaleTranslationResult::trials)
      .def_readonly("invalid_trials", &ScaleTranslationResult::invalid_trials);

  py::class_<SmoothnessResult>(m, "SmoothnessResult")
      .def_readonly("pass_", &SmoothnessResult::pass)
      .def_readonly("max_discrepancy", &SmoothnessResult::max_discrepancy);

  py::class_<CapacityCase>(m, "CapacityCase")
      .def_readonly("shape", &CapacityCase::shape)
      .def_readonly("explained_variance", &CapacityCase::explained_variance)
      .def_readonly("pass_", &CapacityCase::pass);

  py::class_<CapacityResult>(m, "CapacityResult")
      .def_readonly("pass_", &CapacityResult::pass)
      .def_readonly("battery", &CapacityResult::battery);

  py::class_<MetaRuleReport>(m, "MetaRuleReport")
      .def_readonly("scale_translation", &MetaRuleReport::scale_translation)
      .def_readonly("strict_monotonicity", &MetaRuleReport::strict_monotonicity)
      .def_readonly("smoothness", &MetaRuleReport::smoothness)
      .def_readonly("capacity", &MetaRuleReport::capacity)
      .def_readonly("parameter_size", &MetaRuleReport::parameter_size)
      .def_readonly("parameter_size_explicit", &MetaRuleReport::parameter_size_explicit)
      .def("all_pass", &MetaRuleReport::all_pass);

  m.def("assess_scale_translation",
        py::overload_cast<const Dataset&, const OrientationVector&, const FitConfig&,
                          int>(&assess_scale_translation),
        py::arg("data"), py::arg("orientation"), py::arg("cfg"), py::arg("trials") = 5);
  m.def("assess_strict_monotonicity", &assess_strict_monotonicity,
        py::arg("control"), py::arg("orientation"), py::arg("grid_size") = 1000);
  m.def("assess_capacity", &assess_capacity, py::arg("cfg"));
  m.def("assess_smoothness", &assess_smoothness, py::arg("control"),
        py::arg("derivative") = DerivativeFn{});
  m.def("assess_all", &assess_all, py::arg("data"), py::arg("orientation"),
        py::arg("cfg"));

  m.def("ranking_csv", &ranking_csv, py::arg("ranking"));
  m.def("fit_report_json", &fit_report_json, py::arg("report"),
        py::arg("parameter_size"));
  m.def("curve_csv", &curve_csv, py::arg("report"), py::arg("samples"));
  m.def("metarule_report_json", &metarule_report_json, py::arg("report"));
}
