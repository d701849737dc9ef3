// Deterministic pattern checks equivalent to the stock rule set, including
// its documented blind spots (static-final fields are bucketed as constants
// and the constant rule is disabled by default, mirroring the Google
// configuration).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "jstyle/extractor.hpp"
#include "jstyle/finding.hpp"

namespace jstyle {

struct RegexRule {
    std::string descriptor;       // e.g. MethodName
    std::string label;            // message prefix, e.g. "Method"
    std::string pattern;
    std::string section;          // guideline id the rule maps to, may be empty
    bool enabledByDefault = true;
};

struct BaselineConfig {
    // descriptor -> replacement pattern; also enables default-disabled rules
    std::map<std::string, std::string> ruleOverrides;
    int maxConsecutiveCaps = 1;
    bool abbreviationCheck = true;
};

/// The built-in rule table keyed by descriptor.
const std::vector<RegexRule>& defaultRules();

std::vector<Finding> checkNamePatterns(const SourceModel& model,
                                       const BaselineConfig& config = {});

/// Flags names containing more than maxConsecutiveCaps consecutive capitals
/// after the first character (classes, methods, fields).
std::vector<Finding> checkAbbreviationAsWord(const SourceModel& model,
                                             int maxConsecutiveCaps = 1);

/// Checks every Javadoc block for a capitalized, punctuated summary fragment.
std::vector<Finding> checkSummaryJavadoc(const SourceModel& model);

/// Runs all baseline checks, sorted by position.
std::vector<Finding> runBaseline(const SourceModel& model,
                                 const BaselineConfig& config = {});

}  // namespace jstyle
