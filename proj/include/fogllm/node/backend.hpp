#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>

#include "fogllm/wire/request.hpp"
#include "fogllm/wire/stream.hpp"

namespace fogllm::node {

/// Sink for streamed SSE event bytes. Returning false aborts emission (client
/// went away).
using EventSink = std::function<bool(std::string_view)>;

/// Inference backend behind the node's OpenAI-mirroring API. Implementations
/// must tolerate concurrent requests.
class NodeBackend {
public:
    virtual ~NodeBackend() = default;

    /// Whole-body completion (stream=false). Returns the JSON response body.
    virtual std::string complete_body(const wire::ChatRequest& request) = 0;

    /// Streamed completion (stream=true). Emits complete SSE events
    /// including the terminal [DONE] sentinel.
    virtual void stream_events(const wire::ChatRequest& request, const EventSink& emit) = 0;

    /// Health probe; a proxy with an unreachable target reports false.
    virtual bool healthy() = 0;
};

/// Deterministic mock: the reply is a pure function of (seed, request).
/// Streaming is paced at tokens_per_second, with an optional fixed delay
/// before the first token so latency harnesses have a known target.
struct MockBackendSettings {
    std::uint64_t seed = 1;
    double tokens_per_second = 0.0;  // 0 = unpaced
    int first_token_delay_ms = 0;
    int default_reply_tokens = 16;   // used when the request has no max_tokens
};

class MockBackend : public NodeBackend {
public:
    explicit MockBackend(MockBackendSettings settings, std::string model_id = {});

    std::string complete_body(const wire::ChatRequest& request) override;
    void stream_events(const wire::ChatRequest& request, const EventSink& emit) override;
    bool healthy() override { return true; }

    std::vector<std::string> reply_tokens(const wire::ChatRequest& request) const;

private:
    MockBackendSettings settings_;
    std::string model_id_;
};

/// Passthrough to any OpenAI-compatible server. Bounded in-flight requests;
/// overflow throws TooManyInFlight. Transport or upstream failures throw
/// BackendUnavailable.
struct ProxyBackendSettings {
    std::string base_url;  // e.g. http://127.0.0.1:11434
    std::string api_key;
    int max_in_flight = 4;
    int timeout_s = 30;
};

struct TooManyInFlight : Error { using Error::Error; };

class ProxyBackend : public NodeBackend {
public:
    explicit ProxyBackend(ProxyBackendSettings settings);

    std::string complete_body(const wire::ChatRequest& request) override;
    void stream_events(const wire::ChatRequest& request, const EventSink& emit) override;
    bool healthy() override;

private:
    class InFlightGuard;

    ProxyBackendSettings settings_;
    std::mutex mutex_;
    int in_flight_ = 0;
};

}  // namespace fogllm::node
