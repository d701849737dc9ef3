// Merging, formatting, and emission of diagnostics.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "jstyle/finding.hpp"

namespace jstyle {

struct FileAudit {
    double latencySeconds = 0.0;
    long inputTokens = 0;
    long outputTokens = 0;
    bool fromCache = false;
    bool providerUsed = false;
    std::string error;  // per-file failure note, empty when clean
};

struct RunReport {
    std::map<std::string, std::vector<Finding>> perFile;  // path -> sorted findings
    std::map<std::string, FileAudit> audit;
};

struct ReportTotals {
    long errors = 0;
    long warnings = 0;
    long files = 0;
    std::map<std::string, long> byDescriptor;
};

ReportTotals computeTotals(const RunReport& report);

/// Union of both lists sorted by (line, column, descriptor). Exact
/// duplicates (same line, descriptor, severity, and quoted token) collapse
/// to the augmented-path finding.
std::vector<Finding> mergeFindings(const std::vector<Finding>& baseline,
                                   const std::vector<Finding>& augmented);

/// One diagnostic line: `[SEV] <path>:<line>:<column>: <message> [<Descriptor>]`.
/// The message is terminated with a period when it lacks terminal punctuation.
std::string formatFinding(std::string_view path, const Finding& finding);

enum class ReportFormat { Text, Json };

std::string emitReport(const RunReport& report, ReportFormat format);

nlohmann::json reportToJson(const RunReport& report);
RunReport reportFromJson(const nlohmann::json& doc);

}  // namespace jstyle
