#pragma once

#include <string>

#include <json.hpp>

#include "nodal/pipeline.hpp"

namespace nodal {

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

/// Human-readable summary, one quantity per line.
std::string render_text(const AnalysisReport& r);

}  // namespace nodal
