#include "rpcrank/io.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace rpcrank {
namespace {

using nlohmann::json;

std::string format_fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

std::string format_full(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

json control_points_json(const ControlPointMatrix& control) {
  json columns = json::array();
  for (int r = 0; r < 4; ++r) {
    json column = json::array();
    for (Eigen::Index j = 0; j < control.rows(); ++j) column.push_back(control(j, r));
    columns.push_back(std::move(column));
  }
  return columns;
}

json monotone_json(const MonotonicityCheck& check) {
  return json{{"pass", check.pass},
              {"witness_s", check.witness_s},
              {"witness_axis", check.witness_axis}};
}

void append_control_rows(std::string& out,
                         const ControlPointMatrix& control,
                         const char* suffix) {
  for (int r = 0; r < 4; ++r) {
    out += "p" + std::to_string(r) + suffix;
    for (Eigen::Index j = 0; j < control.rows(); ++j)
      out += "," + format_full(control(j, r));
    out += "\n";
  }
}

}  // namespace

void atomic_write_text(const std::string& path, const std::string& content) {
  static std::atomic<unsigned> serial{0};
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp" + std::to_string(serial.fetch_add(1));
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write '" + temp.string() + "'");
    file << content;
    if (!file.flush())
      throw std::runtime_error("failed writing '" + temp.string() + "'");
  }
  std::filesystem::rename(temp, target);
}

std::string ranking_csv(const RankingList& ranking) {
  std::string out = "id,score,rank\n";
  for (const RankedItem& item : ranking.items) {
    out += item.id;
    out += ",";
    out += format_fixed(item.score, 6);
    out += ",";
    out += std::to_string(item.rank);
    out += "\n";
  }
  return out;
}

std::string fit_report_json(const FitReport& report, int parameter_size) {
  json doc;
  doc["j_trajectory"] = report.j_trajectory;
  doc["iterations"] = report.iterations;
  doc["converged"] = report.converged;
  doc["stopped_on_increase"] = report.stopped_on_increase;
  doc["explained_variance"] = report.explained_variance;
  doc["monotone"] = monotone_json(report.monotone);
  doc["residual_norms"] = std::vector<double>(
      report.residual_norms.data(),
      report.residual_norms.data() + report.residual_norms.size());
  doc["P_normalized"] = control_points_json(report.P_normalized);
  doc["P_original"] = control_points_json(report.P_original);
  doc["parameter_size"] = parameter_size;
  return doc.dump(2) + "\n";
}

std::string curve_csv(const FitReport& report, int samples) {
  if (samples < 2) throw std::invalid_argument("at least two curve samples are required");
  const Eigen::Index d = report.P_original.rows();
  std::string out = "s";
  for (Eigen::Index j = 1; j <= d; ++j) out += ",f_" + std::to_string(j);
  out += "\n";
  for (int k = 0; k < samples; ++k) {
    const double s = static_cast<double>(k) / (samples - 1);
    const Eigen::VectorXd point = evaluate_curve(report.P_original, s);
    out += format_full(s);
    for (Eigen::Index j = 0; j < d; ++j) out += "," + format_full(point[j]);
    out += "\n";
  }
  append_control_rows(out, report.P_original, "");
  append_control_rows(out, report.P_normalized, "_norm");
  return out;
}

std::string metarule_report_json(const MetaRuleReport& report) {
  json doc;
  doc["scale_translation"] = json{{"pass", report.scale_translation.pass},
                                  {"trials", report.scale_translation.trials},
                                  {"invalid_trials", report.scale_translation.invalid_trials}};
  doc["strict_monotonicity"] = monotone_json(report.strict_monotonicity);
  doc["smoothness"] = json{{"pass", report.smoothness.pass},
                           {"max_discrepancy", report.smoothness.max_discrepancy}};
  json battery = json::array();
  for (const CapacityCase& entry : report.capacity.battery) {
    battery.push_back(json{{"shape", entry.shape},
                           {"explained_variance", entry.explained_variance},
                           {"pass", entry.pass}});
  }
  doc["capacity"] = json{{"pass", report.capacity.pass}, {"battery", battery}};
  doc["parameter_size"] = report.parameter_size;
  doc["parameter_size_explicit"] = report.parameter_size_explicit;
  doc["all_pass"] = report.all_pass();
  return doc.dump(2) + "\n";
}

}  // namespace rpcrank
