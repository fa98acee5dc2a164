#pragma once

#include <string>

#include "fogllm/core/platform.hpp"

namespace fogllm::client {

/// Token rejected by the remote side (401/403).
struct AuthRejected : Error { using Error::Error; };

struct HttpPlatformConfig {
    LayerKind kind = LayerKind::cloud;
    std::string base_url;       // http(s)://host:port
    std::string bearer_token;   // cloud API key or fog JWT
    std::string ca_cert_path;   // pinned CA for TLS endpoints; empty disables verification
    int capability_score = 0;
    int timeout_s = 60;
};

/// Consumes any endpoint speaking the chat-completions shape over HTTP(S):
/// remote cloud services, discovered fog nodes, or local stubs. Streams with
/// SSE; deltas surface through the session callback.
class HttpPlatform : public Platform {
public:
    explicit HttpPlatform(HttpPlatformConfig config);

    const PlatformDescriptor& descriptor() const override { return descriptor_; }

    GenerationOutcome generate(const ModelSchema& schema, const ChatContext& context,
                               const std::vector<ToolSpec>& tools,
                               const DeltaCallback& on_delta) override;

    /// GET /v1/models with auth; throws AuthRejected or BackendError.
    std::vector<std::string> list_models();

    const HttpPlatformConfig& config() const { return config_; }

private:
    HttpPlatformConfig config_;
    PlatformDescriptor descriptor_;
};

}  // namespace fogllm::client
