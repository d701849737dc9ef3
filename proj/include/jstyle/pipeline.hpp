// The per-file analysis pipeline and the command entry points used by the
// CLI and the test suites.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "jstyle/baseline.hpp"
#include "jstyle/cache.hpp"
#include "jstyle/config.hpp"
#include "jstyle/harness.hpp"
#include "jstyle/provider.hpp"
#include "jstyle/report.hpp"

namespace jstyle {

struct RunOptions {
    bool noWarnings = false;
    ReportFormat format = ReportFormat::Text;
    std::filesystem::path cacheDir;  // overrides config when nonempty
    int jobs = 0;                    // 0 = hardware concurrency
    int providerConcurrency = 4;
    bool bypassCache = false;
};

/// Recursively collects .java files from the given paths, sorted.
std::vector<std::filesystem::path> collectJavaFiles(
    const std::vector<std::filesystem::path>& paths);

/// Analyzes one file end to end: extract, baseline checks, provider fetch
/// (cache-aware), parse, merge, warning filter.
struct FileAnalysis {
    std::vector<Finding> findings;
    FileAudit audit;
    std::string rawResponse;
};

FileAnalysis analyzeFile(const std::string& path, const std::string& sourceBytes,
                         const ToolConfig& config, const BaselineConfig& baselineConfig,
                         Provider* provider, ResponseCache* cache, bool bypassCache);

/// Runs the pipeline over files. `provider` may be injected for tests; when
/// null it is built from the config. Returns the assembled report.
RunReport runPipeline(const std::vector<std::filesystem::path>& files, const ToolConfig& config,
                      const RunOptions& options, Provider* provider = nullptr);

/// `check` command: analyze, emit, return exit code (0 clean, 1 findings,
/// 2 tool error).
int runCheck(const std::vector<std::filesystem::path>& paths, const ToolConfig& config,
             const RunOptions& options, std::ostream& out, std::ostream& err,
             Provider* provider = nullptr);

struct EvalResult {
    MetricsSummary baseline;
    MetricsSummary hybrid;
    std::string table;
};

/// `eval` command: scores two run reports against ground truth.
EvalResult runEval(const RunReport& baselineReport, const RunReport& hybridReport,
                   const std::vector<GroundTruthEntry>& truth, std::ostream& warn);

/// `stability` command: N cache-bypassing runs over the same files; outputs
/// are the concatenated raw responses per run.
StabilityReport runStability(const std::vector<std::filesystem::path>& files,
                             int runs, const ToolConfig& config, const RunOptions& options,
                             std::vector<std::string>* rawOutputs = nullptr,
                             Provider* provider = nullptr);

/// Builds the provider selected by the config. Returned pointer owns state.
std::unique_ptr<Provider> makeProvider(const ToolConfig& config);

/// Loads the lexicon configured for the run (builtin when no path is set).
SegmentationLexicon loadLexicon(const ToolConfig& config);

}  // namespace jstyle
