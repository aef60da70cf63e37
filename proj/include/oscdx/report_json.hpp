#pragma once

#include "json.hpp"

#include "oscdx/classifier.hpp"
#include "oscdx/localize.hpp"
#include "oscdx/monte_carlo.hpp"

namespace oscdx {

inline constexpr const char* kReportSchema = "oscillodx/diagnosis-report/v1";

nlohmann::json to_json(const DiagnosisConfig& cfg);
nlohmann::json to_json(const SpikeMetrics& spike);
nlohmann::json to_json(const DiagnosisReport& report);
nlohmann::json to_json(const SourceRanking& ranking);

// Full report document: schema tag plus diagnosis and/or ranking.
nlohmann::json report_document(const DiagnosisReport* diagnosis, const SourceRanking* ranking);

DiagnosisReport diagnosis_from_json(const nlohmann::json& j);

}  // namespace oscdx
