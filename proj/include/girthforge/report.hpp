#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "girthforge/classify.hpp"
#include "girthforge/search.hpp"

namespace girthforge {

inline constexpr const char* kToolVersion = "0.1.0";

// JSON report payloads. Objects serialize with sorted keys (the library's
// default ordering), so byte-identical reports certify reproducible runs;
// wall-clock measurements live exclusively under the "timing" key, which
// strip_timing() removes for comparisons.

nlohmann::json to_json(const ClassSpec& spec);
nlohmann::json to_json(const SearchStats& stats);
nlohmann::json to_json(const SearchOutcome& outcome);
nlohmann::json to_json(const FamilyClassification& cls);

/// Self-contained run report: the command line that produced it, the
/// parameters, the payload, the seed when randomness was involved, timing,
/// and the tool version.
nlohmann::json run_report(const std::vector<std::string>& command_echo,
                          nlohmann::json params, nlohmann::json outcome,
                          double elapsed_seconds);

nlohmann::json strip_timing(nlohmann::json report);

std::string dump_report(const nlohmann::json& report);

}  // namespace girthforge
