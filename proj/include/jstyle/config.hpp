// Configuration loading: an XML module/property document in the style of
// classic linter configuration files.
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jstyle/provider.hpp"

namespace jstyle {

class ConfigParseError : public std::runtime_error {
public:
    ConfigParseError(int line, int column, const std::string& message)
        : std::runtime_error("config:" + std::to_string(line) + ":" + std::to_string(column) +
                             ": " + message),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class MissingRequiredProperty : public std::runtime_error {
public:
    explicit MissingRequiredProperty(const std::string& what) : std::runtime_error(what) {}
};

struct XmlNode {
    std::string name;
    std::map<std::string, std::string> attributes;
    std::vector<XmlNode> children;
    int line = 0;
    int column = 0;
};

/// Strict parser for the element/attribute subset the config needs.
/// Throws ConfigParseError with position on any defect.
XmlNode parseXml(std::string_view text);

enum class ProviderKind { Remote, Offline, Replay };

const char* toString(ProviderKind kind);

struct ToolConfig {
    ProviderConfig provider;
    ProviderKind providerKind = ProviderKind::Offline;
    std::filesystem::path cacheDir;
    std::optional<std::filesystem::path> lexiconPath;
    std::filesystem::path replayDir;
    std::map<std::string, std::string> ruleOverrides;  // descriptor -> pattern
    int maxConsecutiveCaps = 1;
};

/// Parses a module/property config document. Unspecified properties take
/// defaults (temperature 1, showWarnings true, enabled true). An apiKey of
/// the form ${ENV:NAME} resolves from the environment.
ToolConfig configFromXml(std::string_view text);

ToolConfig loadConfig(const std::filesystem::path& path);

/// Enforces presence of endpoint/apiKey for an enabled remote provider and
/// of the fixture directory for replay. Throws MissingRequiredProperty.
void validateConfig(const ToolConfig& config);

}  // namespace jstyle
