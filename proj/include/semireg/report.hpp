#pragma once

// JSON and Markdown forms of reports and certificates.

#include <nlohmann/json.hpp>
#include <string>

#include "semireg/classify.hpp"
#include "semireg/periodicity.hpp"

namespace semireg {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const Witness& w);

/// Timings vary between runs; leave them out for byte-stable output.
nlohmann::json to_json(const ClassificationReport& r, bool with_timings = true);

nlohmann::json to_json(const PeriodicityCertificate& c);

nlohmann::json versions_json();

/// One table row per report: spec, size, then each flag as yes/no.
std::string markdown_table(const std::vector<ClassificationReport>& reports);

}  // namespace semireg
