// Response grammar: parsing model output lines into findings, descriptor
// mapping, and the inverse rendering used by the deterministic provider.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jstyle/finding.hpp"

namespace jstyle {

struct ParseDiagnostic {
    int lineNumber = 0;   // 1-based line within the response text
    std::string text;     // the offending line
    std::string reason;
};

struct ParseResult {
    std::vector<Finding> findings;
    std::vector<ParseDiagnostic> diagnostics;
};

/// Parses a response line by line. Grammar per line:
///   [<severity>](<line>) (<section>) (<message>)
/// Severity is matched case-insensitively. Blank lines are ignored; a
/// response that trims to nothing yields no findings and no diagnostics.
/// Non-conforming non-blank lines become diagnostics, never findings.
ParseResult parseResponse(std::string_view rawText, Origin origin = Origin::Llm);

/// Renders a finding in the response grammar (inverse of parseResponse).
std::string renderFinding(const Finding& finding);

class UnknownSectionError : public std::invalid_argument {
public:
    explicit UnknownSectionError(const std::string& section)
        : std::invalid_argument("unknown guideline section: " + section) {}
};

/// Maps a guideline section id to its diagnostic descriptor.
/// Throws UnknownSectionError outside the nine target sections.
std::string mapDescriptor(std::string_view section);

/// Inverse of mapDescriptor for the baseline descriptors; "" when unmapped.
std::string sectionForDescriptor(std::string_view descriptor);

std::vector<Finding> filterWarnings(std::vector<Finding> findings, bool showWarnings);

}  // namespace jstyle
