#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "fogllm/core/platform.hpp"

namespace fogllm {

/// Deterministic word stream: the same (seed, fingerprint, token_count) always
/// yields the same tokens. Each token carries its trailing space except the
/// last one.
std::vector<std::string> seeded_reply_tokens(std::uint64_t seed, std::uint64_t fingerprint,
                                             std::size_t token_count);

std::uint64_t fnv1a64(std::string_view bytes);

/// One scripted generation round: either a list of content deltas or a list
/// of requested tool calls (finish_reason tool_calls).
struct ScriptedRound {
    std::vector<std::string> deltas;
    std::vector<ToolCallRef> tool_calls;
    FinishReason finish = FinishReason::stop;

    static ScriptedRound text(std::vector<std::string> deltas);
    static ScriptedRound tools(std::vector<ToolCallRef> calls);
    static ScriptedRound failure(std::string detail);

    bool fails = false;
    std::string failure_detail;
};

/// In-process platform that replays a script, one round per generate call.
/// Used wherever a real model would sit: tests, the simnet local layer, and
/// the cloud stub. Running past the script's end throws BackendError.
class ScriptedPlatform : public Platform {
public:
    ScriptedPlatform(PlatformDescriptor descriptor, std::vector<ScriptedRound> rounds);

    /// Replays the final round forever instead of exhausting the script.
    void set_repeat_last(bool repeat) { repeat_last_ = repeat; }

    const PlatformDescriptor& descriptor() const override { return descriptor_; }

    GenerationOutcome generate(const ModelSchema& schema, const ChatContext& context,
                               const std::vector<ToolSpec>& tools,
                               const DeltaCallback& on_delta) override;

    std::size_t rounds_played() const;

    /// Tool specs observed by the most recent generate call.
    std::vector<ToolSpec> last_tools() const;

private:
    PlatformDescriptor descriptor_;
    std::vector<ScriptedRound> rounds_;
    bool repeat_last_ = false;

    mutable std::mutex mutex_;
    std::size_t next_round_ = 0;
    std::vector<ToolSpec> last_tools_;
};

/// Platform producing seeded-deterministic word salad, sized by the schema's
/// max_output_tokens cap or reply_tokens, whichever is smaller.
class SeededMockPlatform : public Platform {
public:
    SeededMockPlatform(PlatformDescriptor descriptor, std::uint64_t seed,
                       std::size_t reply_tokens = 16);

    const PlatformDescriptor& descriptor() const override { return descriptor_; }

    GenerationOutcome generate(const ModelSchema& schema, const ChatContext& context,
                               const std::vector<ToolSpec>& tools,
                               const DeltaCallback& on_delta) override;

private:
    PlatformDescriptor descriptor_;
    std::uint64_t seed_;
    std::size_t reply_tokens_;
};

}  // namespace fogllm
