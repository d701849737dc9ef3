// Providers for the augmented check: a remote chat-completions client, a
// replay provider serving recorded responses, and a deterministic offline
// analyzer. All three produce raw response text in the same grammar.
#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "jstyle/extractor.hpp"
#include "jstyle/naming.hpp"
#include "jstyle/prompt.hpp"

namespace jstyle {

struct ProviderConfig {
    std::string endpoint;
    std::string apiKey;
    std::optional<std::string> model;  // omitted when embedded in the endpoint URL
    double temperature = 1.0;          // must stay within [0, 2]
    std::optional<int> maxTokens;
    std::optional<int> thinkingTokens;
    bool showWarnings = true;
    bool enabled = true;
};

struct LlmResponse {
    std::string rawText;
    long inputTokens = 0;
    long outputTokens = 0;
    double latencySeconds = 0.0;
    bool fromCache = false;
};

class ProviderError : public std::runtime_error {
public:
    enum class Kind {
        Auth,            // non-retryable credential failure
        RateLimited,
        Timeout,
        TruncatedOutput, // finish reason was a length stop
        Network,
        BadResponse,
        MissingFixture,
    };

    ProviderError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct HttpOptions {
    int attempts = 3;
    int baseDelayMs = 500;       // exponential backoff base
    int connectTimeoutSec = 10;
    int readTimeoutSec = 120;
};

/// One chat-completions request with retries on transient failures.
/// Throws ProviderError. Every attempt increments the network-attempt spy.
LlmResponse invokeProvider(const ProviderConfig& config, const PromptBundle& prompt,
                           const HttpOptions& http = {});

/// Everything a provider may need to answer one file's analysis.
struct AnalysisInput {
    std::string path;
    const std::string* sourceBytes = nullptr;
    const PromptBundle* prompt = nullptr;
    const SourceModel* model = nullptr;
    std::string cacheKey;
};

class Provider {
public:
    virtual ~Provider() = default;
    virtual std::string name() const = 0;
    virtual Origin origin() const = 0;
    virtual LlmResponse fetch(const AnalysisInput& input) = 0;
    long invocations() const { return calls_.load(); }

protected:
    std::atomic<long> calls_{0};
};

class RemoteProvider : public Provider {
public:
    explicit RemoteProvider(ProviderConfig config, HttpOptions http = {});
    std::string name() const override { return "remote"; }
    Origin origin() const override { return Origin::Llm; }
    LlmResponse fetch(const AnalysisInput& input) override;

    /// Process-wide count of HTTP attempts; the offline-isolation spy.
    static long networkAttempts();
    static void resetNetworkAttempts();

private:
    ProviderConfig config_;
    HttpOptions http_;
};

/// Serves recorded raw responses from a directory. Lookup order for the
/// n-th fetch of a key within this provider's lifetime:
///   <key>.run<n>.txt, then <key>.txt.
class ReplayProvider : public Provider {
public:
    explicit ReplayProvider(std::filesystem::path fixtureDir);
    std::string name() const override { return "replay"; }
    Origin origin() const override { return Origin::Llm; }
    LlmResponse fetch(const AnalysisInput& input) override;

private:
    std::filesystem::path dir_;
    std::mutex mutex_;
    std::map<std::string, int> served_;
};

/// Deterministic rule evaluation over the extracted source model, rendered
/// in the response grammar so it shares the downstream path.
class OfflineProvider : public Provider {
public:
    explicit OfflineProvider(const SegmentationLexicon& lexicon);
    std::string name() const override { return "offline"; }
    Origin origin() const override { return Origin::Offline; }
    LlmResponse fetch(const AnalysisInput& input) override;

private:
    const SegmentationLexicon* lexicon_;
};

}  // namespace jstyle
