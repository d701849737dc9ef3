#include "jstyle/finding.hpp"

#include <stdexcept>

namespace jstyle {

const char* toString(Severity severity) {
    return severity == Severity::Error ? "error" : "warning";
}

const char* toString(Origin origin) {
    switch (origin) {
        case Origin::Baseline: return "baseline";
        case Origin::Llm: return "llm";
        case Origin::Offline: return "offline";
    }
    return "baseline";
}

Severity severityFromString(const std::string& text) {
    if (text == "error") return Severity::Error;
    if (text == "warning") return Severity::Warning;
    throw std::invalid_argument("unknown severity: " + text);
}

Origin originFromString(const std::string& text) {
    if (text == "baseline") return Origin::Baseline;
    if (text == "llm") return Origin::Llm;
    if (text == "offline") return Origin::Offline;
    throw std::invalid_argument("unknown origin: " + text);
}

std::string quotedToken(const std::string& message) {
    auto open = message.find('\'');
    if (open == std::string::npos) return "";
    auto close = message.find('\'', open + 1);
    if (close == std::string::npos) return "";
    return message.substr(open + 1, close - open - 1);
}

}  // namespace jstyle
