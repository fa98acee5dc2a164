#include "fogllm/core/session.hpp"

namespace fogllm {

InferenceSession::InferenceSession(ModelSchema schema, std::shared_ptr<Platform> platform)
    : schema_(std::move(schema)), platform_(std::move(platform)) {
    if (!platform_) {
        throw NoPlatformAvailable("session requires a platform");
    }
}

GenerationOutcome InferenceSession::generate(std::optional<Message> user_message,
                                             const std::vector<ToolSpec>& tools,
                                             const DeltaCallback& on_delta) {
    {
        std::lock_guard lock(state_mutex_);
        if (state_ == SessionState::generating) {
            throw ConcurrentGeneration("a generation is already in flight");
        }
        if (state_ == SessionState::error) {
            throw BackendError("session is in error state (" + error_detail_ + "); reset() first");
        }
        state_ = SessionState::generating;
    }

    try {
        if (user_message) {
            context_.append(std::move(*user_message));
        }
        std::string streamed;
        GenerationOutcome outcome = platform_->generate(
            schema_, context_, tools, [&](std::string_view delta) {
                streamed.append(delta);
                if (on_delta) on_delta(delta);
            });
        // Stream-concat contract: the final content equals the joined deltas.
        // Backends that only report a whole body emit it as a single delta.
        if (outcome.message.content.empty() && !streamed.empty()) {
            outcome.message.content = streamed;
        }
        context_.append(outcome.message);

        std::lock_guard lock(state_mutex_);
        state_ = SessionState::idle;
        return outcome;
    } catch (const BackendError& e) {
        std::lock_guard lock(state_mutex_);
        state_ = SessionState::error;
        error_detail_ = e.what();
        throw;
    } catch (...) {
        // Non-backend failures (bad message, caller bug) do not poison the
        // session; the state machine returns to idle.
        std::lock_guard lock(state_mutex_);
        state_ = SessionState::idle;
        throw;
    }
}

GenerationOutcome InferenceSession::generate(const std::string& user_text,
                                             const DeltaCallback& on_delta) {
    return generate(user_message(user_text), {}, on_delta);
}

void InferenceSession::append(Message message) {
    std::lock_guard lock(state_mutex_);
    if (state_ == SessionState::generating) {
        throw ConcurrentGeneration("cannot append while generating");
    }
    context_.append(std::move(message));
}

void InferenceSession::reset() {
    std::lock_guard lock(state_mutex_);
    if (state_ == SessionState::error) {
        state_ = SessionState::idle;
        error_detail_.clear();
    }
}

SessionState InferenceSession::state() const {
    std::lock_guard lock(state_mutex_);
    return state_;
}

std::string InferenceSession::error_detail() const {
    std::lock_guard lock(state_mutex_);
    return error_detail_;
}

}  // namespace fogllm
