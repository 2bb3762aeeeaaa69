#pragma once

#include "lcmid/ident.hpp"
#include "lcmid/model_io.hpp"

#include <optional>
#include <string>

namespace lcmid {

ordered_json coefficient_map_to_json(const CoefficientMap& map);
ordered_json verdict_to_json(const Verdict& verdict);

/// Full report. `seconds` is only written when given, so reports without
/// it are byte-stable for fixed (model, trials, seed).
ordered_json analysis_to_json(const Analysis& analysis, std::optional<double> seconds = std::nullopt);
std::string analysis_to_text(const Analysis& analysis, std::optional<double> seconds = std::nullopt);

/// "identifiable (certified)", "unidentifiable (Monte Carlo)", ...
std::string verdict_summary(const Verdict& verdict);

}  // namespace lcmid
