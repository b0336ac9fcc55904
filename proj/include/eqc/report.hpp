#pragma once

#include "eqc/analysis.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace eqc {

inline constexpr int kSchemaVersion = 1;

enum class Command { Analyze, Hilbert, Kernel, CheckFormality, Basis };

std::string_view command_name(Command c);

// Structured report. The text rendering below reads nothing but this object.
nlohmann::ordered_json to_json(const AnalysisReport& report, Command command);
std::string render_text(const nlohmann::ordered_json& report);
std::string render_json(const nlohmann::ordered_json& report);

}  // namespace eqc
