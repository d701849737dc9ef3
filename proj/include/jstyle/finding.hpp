// Diagnostic record shared by the deterministic checks and the augmented path.
#pragma once

#include <string>

namespace jstyle {

enum class Severity { Error, Warning };

/// Which analysis path produced a finding.
enum class Origin { Baseline, Llm, Offline };

struct Finding {
    Severity severity = Severity::Error;
    int line = 0;
    int column = 1;
    std::string section;     // guideline id such as "2.2.1"; empty for checks outside the nine
    std::string message;
    std::string descriptor;  // rule tag, e.g. MethodName
    Origin origin = Origin::Baseline;

    friend bool operator==(const Finding&, const Finding&) = default;
};

const char* toString(Severity severity);
const char* toString(Origin origin);
Severity severityFromString(const std::string& text);
Origin originFromString(const std::string& text);

/// First token enclosed in single quotes within a message, or "" when none.
std::string quotedToken(const std::string& message);

}  // namespace jstyle
