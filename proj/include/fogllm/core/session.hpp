#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fogllm/core/chat.hpp"
#include "fogllm/core/platform.hpp"
#include "fogllm/core/schema.hpp"

namespace fogllm {

enum class SessionState { idle, generating, error };

/// The LLM in execution: a chat context bound to one platform. A session has
/// one logical owner; it may move between threads but must not be shared
/// mid-generation. At most one generation is in flight at a time.
class InferenceSession {
public:
    InferenceSession(ModelSchema schema, std::shared_ptr<Platform> platform);

    /// Appends user_message (when present), runs the platform generation and
    /// appends the assistant reply. State goes idle -> generating -> idle; a
    /// backend failure leaves the session in the error state until reset().
    ///
    /// Throws ConcurrentGeneration when a generation is already in flight and
    /// BackendError on platform failure (or when called in the error state).
    GenerationOutcome generate(std::optional<Message> user_message,
                               const std::vector<ToolSpec>& tools = {},
                               const DeltaCallback& on_delta = {});

    GenerationOutcome generate(const std::string& user_text, const DeltaCallback& on_delta = {});

    /// Appends a message between generations (tool results, extra history).
    /// Throws ConcurrentGeneration while a generation is in flight.
    void append(Message message);

    /// Clears the error state back to idle. No-op when not in error.
    void reset();

    SessionState state() const;
    std::string error_detail() const;

    const ModelSchema& schema() const { return schema_; }
    const ChatContext& context() const { return context_; }
    ChatContext& context() { return context_; }
    const std::shared_ptr<Platform>& platform() const { return platform_; }
    const PlatformDescriptor& bound_platform() const { return platform_->descriptor(); }

private:
    ModelSchema schema_;
    std::shared_ptr<Platform> platform_;
    ChatContext context_;

    mutable std::mutex state_mutex_;
    SessionState state_ = SessionState::idle;
    std::string error_detail_;
};

}  // namespace fogllm
