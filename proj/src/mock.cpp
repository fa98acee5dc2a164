#include "fogllm/core/mock.hpp"

#include <array>
#include <random>

namespace fogllm {

namespace {

// Neutral filler vocabulary for deterministic mock output.
constexpr std::array<std::string_view, 32> kWords = {
    "alpha", "bravo",  "charlie", "delta",  "echo",   "foxtrot", "golf",   "hotel",
    "india", "juliet", "kilo",    "lima",   "mike",   "november", "oscar", "papa",
    "quebec", "romeo", "sierra",  "tango",  "uniform", "victor",  "whiskey", "xray",
    "yankee", "zulu",  "zero",    "one",    "two",     "three",   "four",   "five",
};

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::vector<std::string> seeded_reply_tokens(std::uint64_t seed, std::uint64_t fingerprint,
                                             std::size_t token_count) {
    std::mt19937_64 rng(seed ^ fingerprint);
    std::uniform_int_distribution<std::size_t> pick(0, kWords.size() - 1);
    std::vector<std::string> tokens;
    tokens.reserve(token_count);
    for (std::size_t i = 0; i < token_count; ++i) {
        std::string word{kWords[pick(rng)]};
        if (i + 1 < token_count) word.push_back(' ');
        tokens.push_back(std::move(word));
    }
    return tokens;
}

ScriptedRound ScriptedRound::text(std::vector<std::string> deltas) {
    ScriptedRound round;
    round.deltas = std::move(deltas);
    round.finish = FinishReason::stop;
    return round;
}

ScriptedRound ScriptedRound::tools(std::vector<ToolCallRef> calls) {
    ScriptedRound round;
    round.tool_calls = std::move(calls);
    round.finish = FinishReason::tool_calls;
    return round;
}

ScriptedRound ScriptedRound::failure(std::string detail) {
    ScriptedRound round;
    round.fails = true;
    round.failure_detail = std::move(detail);
    return round;
}

ScriptedPlatform::ScriptedPlatform(PlatformDescriptor descriptor, std::vector<ScriptedRound> rounds)
    : descriptor_(std::move(descriptor)), rounds_(std::move(rounds)) {}

GenerationOutcome ScriptedPlatform::generate(const ModelSchema&, const ChatContext&,
                                             const std::vector<ToolSpec>& tools,
                                             const DeltaCallback& on_delta) {
    ScriptedRound round;
    {
        std::lock_guard lock(mutex_);
        last_tools_ = tools;
        if (next_round_ >= rounds_.size()) {
            if (repeat_last_ && !rounds_.empty()) {
                next_round_ = rounds_.size() - 1;
            } else {
                throw BackendError("scripted platform exhausted after " +
                                   std::to_string(rounds_.size()) + " rounds");
            }
        }
        round = rounds_[next_round_++];
    }

    if (round.fails) {
        throw BackendError(round.failure_detail);
    }

    std::string content;
    for (const auto& delta : round.deltas) {
        content.append(delta);
        if (on_delta) on_delta(delta);
    }

    GenerationOutcome outcome;
    outcome.message = assistant_message(std::move(content), round.tool_calls);
    outcome.finish = round.finish;
    return outcome;
}

std::size_t ScriptedPlatform::rounds_played() const {
    std::lock_guard lock(mutex_);
    return next_round_;
}

std::vector<ToolSpec> ScriptedPlatform::last_tools() const {
    std::lock_guard lock(mutex_);
    return last_tools_;
}

SeededMockPlatform::SeededMockPlatform(PlatformDescriptor descriptor, std::uint64_t seed,
                                       std::size_t reply_tokens)
    : descriptor_(std::move(descriptor)), seed_(seed), reply_tokens_(reply_tokens) {}

GenerationOutcome SeededMockPlatform::generate(const ModelSchema& schema,
                                               const ChatContext& context,
                                               const std::vector<ToolSpec>&,
                                               const DeltaCallback& on_delta) {
    std::string fingerprint = schema.model_id();
    for (const auto& m : context.entries()) {
        fingerprint += '\x1f';
        fingerprint += to_string(m.role);
        fingerprint += ':';
        fingerprint += m.content;
    }
    std::size_t count = std::min<std::size_t>(reply_tokens_,
                                              static_cast<std::size_t>(schema.max_output_tokens()));
    auto tokens = seeded_reply_tokens(seed_, fnv1a64(fingerprint), count);

    std::string content;
    for (const auto& token : tokens) {
        content.append(token);
        if (on_delta) on_delta(token);
    }

    GenerationOutcome outcome;
    outcome.message = assistant_message(std::move(content));
    outcome.finish = FinishReason::stop;
    return outcome;
}

}  // namespace fogllm
