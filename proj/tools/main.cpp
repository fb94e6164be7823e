#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "rpcrank/baselines.hpp"
#include "rpcrank/dataset.hpp"
#include "rpcrank/fit.hpp"
#include "rpcrank/io.hpp"
#include "rpcrank/metarules.hpp"

namespace {

struct CommonOpts {
  std::string input;
  std::string alpha;
  std::string id_col;
  double tol = 1e-6;
  int max_iter = 500;
  int grid = 64;
  double gss_tol = 1e-6;
  std::uint64_t seed = 1;
  std::string endpoints = "free";
  bool clamp = false;
};

void add_common_options(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("--input", opts.input, "input CSV with a header row")->required();
  sub->add_option("--alpha", opts.alpha,
                  "comma-separated orientation, one +/- per attribute")
      ->required();
  sub->add_option("--id-col", opts.id_col, "header name of the id column");
  sub->add_option("--tol", opts.tol, "relative objective-decrease stop");
  sub->add_option("--max-iter", opts.max_iter, "iteration cap");
  sub->add_option("--grid", opts.grid, "projection scan grid size");
  sub->add_option("--gss-tol", opts.gss_tol, "golden-section bracket tolerance");
  sub->add_option("--seed", opts.seed,
                  "fit seed (falls back to RPCRANK_SEED, then 1)");
  sub->add_option("--endpoints", opts.endpoints, "endpoint policy")
      ->check(CLI::IsMember({"free", "fixed"}));
  sub->add_flag("--clamp", opts.clamp,
                "clamp interior control points into the unit box each step");
}

std::uint64_t resolve_seed(const CLI::App* sub, const CommonOpts& opts) {
  if (sub->count("--seed") > 0) return opts.seed;
  if (const char* env = std::getenv("RPCRANK_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("RPCRANK_SEED is not an integer: '") +
                                  env + "'");
    }
  }
  return 1;
}

rpcrank::FitConfig make_config(const CLI::App* sub, const CommonOpts& opts) {
  rpcrank::FitConfig cfg;
  cfg.xi = opts.tol;
  cfg.max_iter = opts.max_iter;
  cfg.endpoints = opts.endpoints == "fixed" ? rpcrank::EndpointPolicy::Fixed
                                            : rpcrank::EndpointPolicy::Free;
  cfg.clamp = opts.clamp;
  cfg.seed = resolve_seed(sub, opts);
  cfg.projection.grid_size = opts.grid;
  cfg.projection.gss_interval_tol = opts.gss_tol;
  return cfg;
}

struct LoadedInput {
  rpcrank::Dataset data;
  rpcrank::OrientationVector alpha;
};

LoadedInput load_input(const CommonOpts& opts) {
  std::optional<std::string> id_col;
  if (!opts.id_col.empty()) id_col = opts.id_col;
  rpcrank::CsvLoadResult loaded = rpcrank::load_csv(opts.input, id_col);
  if (loaded.dropped_rows > 0) {
    std::cerr << "note: dropped " << loaded.dropped_rows
              << " rows with missing or non-numeric cells\n";
  }
  rpcrank::OrientationVector alpha = rpcrank::OrientationVector::parse(opts.alpha);
  if (alpha.dim() != loaded.dataset.d()) {
    throw std::invalid_argument(
        "alpha has " + std::to_string(alpha.dim()) + " entries but dataset has " +
        std::to_string(loaded.dataset.d()) + " attributes");
  }
  return LoadedInput{std::move(loaded.dataset), std::move(alpha)};
}

int run_fit(const CLI::App* sub, const CommonOpts& opts, const std::string& output,
            const std::string& report_path, const std::string& curve_path,
            int curve_samples, bool strict) {
  const LoadedInput input = load_input(opts);
  const rpcrank::FitConfig cfg = make_config(sub, opts);
  const rpcrank::NormalizedDataset normalized = rpcrank::normalize(input.data);
  const rpcrank::FitResult result = rpcrank::fit(normalized, input.alpha, cfg);

  const rpcrank::RankingList ranking =
      rpcrank::rank_from_scores(input.data.object_ids, result.scores);
  rpcrank::atomic_write_text(output, rpcrank::ranking_csv(ranking));
  const int parameter_size = static_cast<int>(4 * input.data.d());
  if (!report_path.empty()) {
    rpcrank::atomic_write_text(report_path,
                               rpcrank::fit_report_json(result.report, parameter_size));
  }
  if (!curve_path.empty()) {
    rpcrank::atomic_write_text(curve_path,
                               rpcrank::curve_csv(result.report, curve_samples));
  }

  if (strict && !result.report.monotone.pass) {
    std::cerr << "error: fitted curve violates strict monotonicity at s="
              << result.report.monotone.witness_s << " on attribute "
              << result.report.monotone.witness_axis << "\n";
    return 3;
  }
  if (!result.report.converged && !result.report.stopped_on_increase) {
    std::cerr << "note: fit did not converge within " << cfg.max_iter
              << " iterations; outputs written anyway\n";
    return 2;
  }
  return 0;
}

int run_baseline(const CommonOpts& opts, const std::string& method,
                 const std::string& output) {
  const LoadedInput input = load_input(opts);
  const rpcrank::NormalizedDataset normalized = rpcrank::normalize(input.data);
  Eigen::VectorXd scores;
  if (method == "pca") {
    const rpcrank::PcaModel model =
        rpcrank::pca_first_component(normalized, input.alpha);
    scores = rpcrank::pca_scores(model, normalized.values);
  } else {
    scores = rpcrank::median_rank_aggregation(
        rpcrank::attribute_rank_lists(normalized, input.alpha));
  }
  const rpcrank::RankingList ranking =
      rpcrank::rank_from_scores(input.data.object_ids, scores);
  rpcrank::atomic_write_text(output, rpcrank::ranking_csv(ranking));
  return 0;
}

int run_assess(const CLI::App* sub, const CommonOpts& opts,
               const std::string& report_path) {
  const LoadedInput input = load_input(opts);
  const rpcrank::FitConfig cfg = make_config(sub, opts);
  const rpcrank::MetaRuleReport report =
      rpcrank::assess_all(input.data, input.alpha, cfg);

  const auto verdict = [](bool pass) { return pass ? "pass" : "FAIL"; };
  std::cout << "scale_translation: " << verdict(report.scale_translation.pass)
            << " (" << report.scale_translation.trials << " trials)\n";
  std::cout << "strict_monotonicity: " << verdict(report.strict_monotonicity.pass)
            << "\n";
  std::cout << "smoothness: " << verdict(report.smoothness.pass)
            << " (max discrepancy " << report.smoothness.max_discrepancy << ")\n";
  std::cout << "capacity: " << verdict(report.capacity.pass);
  for (const auto& entry : report.capacity.battery)
    std::cout << " " << entry.shape << "=" << entry.explained_variance;
  std::cout << "\n";
  std::cout << "parameter_size: " << report.parameter_size << " (explicit)\n";
  std::cout << "overall: " << verdict(report.all_pass()) << "\n";

  if (!report_path.empty())
    rpcrank::atomic_write_text(report_path, rpcrank::metarule_report_json(report));
  return report.all_pass() ? 0 : 1;
}

int run_emit_curve(const CLI::App* sub, const CommonOpts& opts,
                   const std::string& output, int curve_samples) {
  const LoadedInput input = load_input(opts);
  const rpcrank::FitConfig cfg = make_config(sub, opts);
  const rpcrank::NormalizedDataset normalized = rpcrank::normalize(input.data);
  const rpcrank::FitResult result = rpcrank::fit(normalized, input.alpha, cfg);
  rpcrank::atomic_write_text(output,
                             rpcrank::curve_csv(result.report, curve_samples));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rpcrank: rank multi-attribute objects along a fitted monotone curve"};
  app.require_subcommand(1);

  CommonOpts fit_opts;
  std::string fit_output, fit_report, fit_curve;
  int fit_curve_samples = 200;
  bool fit_strict = false;
  CLI::App* fit_cmd = app.add_subcommand("fit", "fit a ranking curve and rank objects");
  add_common_options(fit_cmd, fit_opts);
  fit_cmd->add_option("--output", fit_output, "ranking CSV path")->required();
  fit_cmd->add_option("--report", fit_report, "fit report JSON path");
  fit_cmd->add_option("--emit-curve", fit_curve, "curve sample CSV path");
  fit_cmd->add_option("--curve-samples", fit_curve_samples, "curve sample count");
  fit_cmd->add_flag("--strict", fit_strict, "fail when the fit is not monotone");

  CommonOpts baseline_opts;
  std::string baseline_method, baseline_output;
  CLI::App* baseline_cmd =
      app.add_subcommand("baseline", "rank with a reference method");
  add_common_options(baseline_cmd, baseline_opts);
  baseline_cmd->add_option("--method", baseline_method, "pca or rankagg")
      ->required()
      ->check(CLI::IsMember({"pca", "rankagg"}));
  baseline_cmd->add_option("--output", baseline_output, "ranking CSV path")->required();

  CommonOpts assess_opts;
  std::string assess_report;
  CLI::App* assess_cmd =
      app.add_subcommand("assess", "run the ranking-rule assessment suite");
  add_common_options(assess_cmd, assess_opts);
  assess_cmd->add_option("--report", assess_report, "assessment JSON path");

  CommonOpts curve_opts;
  std::string curve_output;
  int curve_samples = 200;
  CLI::App* curve_cmd =
      app.add_subcommand("emit-curve", "fit and write sampled curve coordinates");
  add_common_options(curve_cmd, curve_opts);
  curve_cmd->add_option("--output", curve_output, "curve CSV path")->required();
  curve_cmd->add_option("--curve-samples", curve_samples, "curve sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(fit_cmd)) {
      return run_fit(fit_cmd, fit_opts, fit_output, fit_report, fit_curve,
                     fit_curve_samples, fit_strict);
    }
    if (app.got_subcommand(baseline_cmd)) {
      return run_baseline(baseline_opts, baseline_method, baseline_output);
    }
    if (app.got_subcommand(assess_cmd)) {
      return run_assess(assess_cmd, assess_opts, assess_report);
    }
    return run_emit_curve(curve_cmd, curve_opts, curve_output, curve_samples);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
