#pragma once

#include <string>

#include "rpcrank/fit.hpp"
#include "rpcrank/metarules.hpp"

namespace rpcrank {

/// Writes content to path via a sibling temp file and an atomic rename, so a
/// crash never leaves a truncated file behind.
void atomic_write_text(const std::string& path, const std::string& content);

/// Ranking table "id,score,rank", rank 1 first, scores with 6 decimals.
std::string ranking_csv(const RankingList& ranking);

/// Fit report as a JSON document; parameter_size is 4 * d.
std::string fit_report_json(const FitReport& report, int parameter_size);

/// Curve samples "s,f_1..f_d" in original units at equispaced parameters,
/// followed by labeled control-point rows in original and normalized units.
/// Values are printed with enough digits to round-trip doubles.
std::string curve_csv(const FitReport& report, int samples);

/// Meta-rule assessment as a JSON document.
std::string metarule_report_json(const MetaRuleReport& report);

}  // namespace rpcrank
