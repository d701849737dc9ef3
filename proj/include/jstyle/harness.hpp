// Evaluation machinery: ground-truth matching, precision/recall/F-measure,
// repeated-run stability, and cost/latency accounting.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jstyle/finding.hpp"

namespace jstyle {

struct GroundTruthEntry {
    std::string file;
    int line = 0;
    std::string section;  // one of the nine target ids
    std::string token;    // the offending token, nonempty
    Severity severity = Severity::Error;
};

class SchemaError : public std::runtime_error {
public:
    SchemaError(int line, const std::string& message)
        : std::runtime_error("truth line " + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Loads JSON Lines ground truth; throws SchemaError with the line number.
std::vector<GroundTruthEntry> loadGroundTruth(std::string_view text);
std::vector<GroundTruthEntry> loadGroundTruthFile(const std::string& path);

/// A finding tied to the file it was reported for.
struct ScoredFinding {
    std::string file;
    Finding finding;
};

struct MatchResult {
    long tp = 0;
    long fp = 0;
    long fn = 0;
    std::vector<std::pair<std::size_t, std::size_t>> matchedPairs;  // (prediction, truth)
};

/// Greedy one-to-one matching. Warnings are excluded from scoring. A pair
/// matches iff same file, same section, the truth token appears quoted in
/// the prediction message, and the line difference is at most 2.
MatchResult matchFindings(const std::vector<ScoredFinding>& predicted,
                          const std::vector<GroundTruthEntry>& truth);

struct MetricsSummary {
    long tp = 0;
    long fp = 0;
    long fn = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    bool degenerate = false;  // a denominator was zero
};

MetricsSummary computeMetrics(long tp, long fp, long fn);

/// Two-decimal display form. Truncates rather than rounds, matching how the
/// headline comparison figures are reported.
std::string displayMetric(double value);

/// 100 * (1 - indel(a, b) / (|a| + |b|)); 100 when both strings are empty.
double similarityRatio(std::string_view a, std::string_view b);

/// Minimal insertions + deletions to turn a into b.
long indelDistance(std::string_view a, std::string_view b);

struct StabilityReport {
    int runs = 0;
    double meanRatioWithWarnings = 0.0;
    double meanRatioErrorsOnly = 0.0;
    std::vector<std::vector<double>> pairwiseMatrix;  // with warnings; diagonal 100
};

/// Pairwise similarity across run outputs, with and without warning lines.
/// Requires at least two outputs.
StabilityReport stabilityStudy(const std::vector<std::string>& outputs);

/// Keeps only lines whose first bracketed tag is an error marker.
std::string errorLinesOnly(std::string_view output);

struct CostModel {
    double inputRate = 1.25e-6;  // dollars per input token
    double outputRate = 1.0e-5;  // dollars per output token
    // The same rates in hundred-millionths of a dollar, for exact arithmetic.
    long long inputRateE8 = 125;
    long long outputRateE8 = 1000;
};

/// Exact dollar amount held in hundred-millionths.
struct Cost {
    long long e8 = 0;
    double dollars() const { return static_cast<double>(e8) / 1e8; }
    std::string toString() const;  // decimal string, at least two fraction digits
    friend Cost operator+(Cost a, Cost b) { return Cost{a.e8 + b.e8}; }
    friend bool operator==(Cost a, Cost b) = default;
};

Cost estimateCost(long long inputTokens, long long outputTokens, const CostModel& model = {});

/// Monotonic wall-clock seconds around an action.
double measureLatency(const std::function<void()>& action);

struct LatencyStats {
    double mean = 0.0;
    double p50 = 0.0;
    double p95 = 0.0;
};

LatencyStats aggregateLatency(std::vector<double> samples);

struct MetricsRow {
    std::string tool;
    MetricsSummary metrics;
};

/// Text table in the headline-comparison shape: total issues, raw counts,
/// and two-decimal precision/recall/F-measure per tool.
std::string renderMetricsTable(const std::vector<MetricsRow>& rows);

}  // namespace jstyle
