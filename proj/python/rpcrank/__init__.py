"""Monotone-curve ranking of multi-attribute objects."""

from rpcrank._core import (
    CapacityCase,
    CapacityResult,
    CsvLoadResult,
    Dataset,
    EndpointPolicy,
    FitConfig,
    FitReport,
    FitResult,
    MetaRuleReport,
    MonotonicityCheck,
    NormalizedDataset,
    Ordering,
    OrientationVector,
    PcaModel,
    ProjectionConfig,
    RankedItem,
    RankingList,
    ScaleTranslationResult,
    SmoothnessResult,
    StepOptions,
    affine_transform_curve,
    assess_all,
    assess_capacity,
    assess_scale_translation,
    assess_smoothness,
    assess_strict_monotonicity,
    attribute_rank_lists,
    bernstein_basis,
    bernstein_coefficients,
    check_monotone_admissible,
    compare_points,
    curve_csv,
    curve_derivative,
    evaluate_curve,
    fit,
    fit_report_json,
    jacobi_eigenvalues,
    least_squares_oracle,
    load_csv,
    median_rank_aggregation,
    metarule_report_json,
    normalize,
    objective_j,
    pca_first_component,
    pca_scores,
    preconditioner,
    project_all,
    project_point,
    rank_from_scores,
    ranking_csv,
    richardson_step,
    sample_curve_monotonicity,
    score_power_matrix,
    step_size,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
