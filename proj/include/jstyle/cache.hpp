// Content-addressed persistent cache of provider responses.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "jstyle/provider.hpp"

namespace jstyle {

struct CacheEntry {
    std::string key;        // lowercase hex digest
    std::string rawText;
    long inputTokens = 0;
    long outputTokens = 0;
    std::string createdAt;  // ISO-8601 UTC
    std::string modelIdentity;
    std::string promptVersion;
};

/// SHA-256 over file bytes, prompt version, and the provider identity
/// (model, temperature, token limits). Lowercase hex.
std::string cacheKey(std::string_view fileBytes, std::string_view promptVersion,
                     std::string_view providerIdentity);

/// Canonical identity string for keying: model (or endpoint), temperature,
/// and token limits, prefixed by the provider kind name.
std::string providerIdentity(std::string_view providerName, const ProviderConfig& config);

/// One JSON file per entry under a two-level hex fan-out. Writes are atomic
/// (temp file + rename); corrupt entries are treated as misses and evicted.
class ResponseCache {
public:
    explicit ResponseCache(std::filesystem::path dir);

    std::optional<CacheEntry> get(const std::string& key);
    void put(const CacheEntry& entry);
    std::size_t clear();  // removes all entries, returns count
    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path entryPath(const std::string& key) const;

private:
    std::filesystem::path dir_;
};

}  // namespace jstyle
