#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "fdebt/analysis.hpp"
#include "fdebt/config.hpp"
#include "fdebt/repo_miner.hpp"

namespace fdebt {

inline constexpr const char* kToolName = "fdebt";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchemaVersion = "1";

struct ReportMeta {
  std::optional<std::string> revision;  // commit analyzed, when from git
  std::int64_t timestamp = 0;           // UTC seconds
};

/// The analysis as a self-contained document. Features appear in ranking
/// order; every other array keeps the deterministic order of the analysis.
nlohmann::json build_report(const Analysis& analysis, const Config& config,
                            const ReportMeta& meta, const DebtLedger* ledger = nullptr);

nlohmann::json delta_json(const DebtDelta& delta);
nlohmann::json ledger_json(const DebtLedger& ledger);

/// Two-space indented UTF-8 with sorted keys and a trailing newline.
std::string export_json(const nlohmann::json& doc);

/// Throws IntegrityError unless every file, entity and finding a feature or
/// finding mentions is present in the report, and totals add up.
void check_report(const nlohmann::json& report);

}  // namespace fdebt
