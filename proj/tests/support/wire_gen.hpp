#pragma once

#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fogllm/wire/request.hpp"
#include "fogllm/wire/stream.hpp"
#include "support/helpers.hpp"

namespace testsupport {

/// Valid randomized ChatRequest. Parameters text is canonical (json::dump)
/// so wire round-trips are exact.
inline fogllm::wire::ChatRequest random_request(std::mt19937& rng) {
    using fogllm::Message;
    using fogllm::Role;

    static const double kTemps[] = {0.0, 0.3, 0.5, 0.7, 1.0, 1.5, 2.0};

    fogllm::wire::ChatRequest request;
    request.model = random_word(rng, 2, 12);
    request.temperature = kTemps[rng() % (sizeof(kTemps) / sizeof(kTemps[0]))];
    request.stream = (rng() % 2) == 0;

    std::uniform_int_distribution<std::size_t> n_messages(1, 5);
    std::size_t count = n_messages(rng);
    for (std::size_t i = 0; i < count; ++i) {
        switch (rng() % 4) {
            case 0:
                request.messages.push_back(fogllm::system_message(random_text(rng)));
                break;
            case 1:
                request.messages.push_back(fogllm::user_message(random_text(rng)));
                break;
            case 2: {
                std::vector<fogllm::ToolCallRef> calls;
                if (rng() % 2 == 0) {
                    nlohmann::json args = {{"q", random_word(rng)}};
                    calls.push_back({"call_" + std::to_string(rng() % 1000), random_word(rng),
                                     args.dump()});
                }
                request.messages.push_back(
                    fogllm::assistant_message(random_text(rng), std::move(calls)));
                break;
            }
            default:
                request.messages.push_back(
                    fogllm::tool_message("call_" + std::to_string(rng() % 1000),
                                         random_text(rng)));
                break;
        }
    }

    if (rng() % 2 == 0) {
        std::uniform_int_distribution<std::size_t> n_tools(1, 3);
        std::size_t tools = n_tools(rng);
        for (std::size_t i = 0; i < tools; ++i) {
            nlohmann::json params = {
                {"type", "object"},
                {"properties", {{random_word(rng), {{"type", "string"}}}}},
            };
            request.tools.push_back(fogllm::ToolSpec{
                random_word(rng, 3, 20) + std::to_string(i), random_text(rng), params.dump()});
        }
    }
    if (rng() % 2 == 0) {
        request.max_tokens = static_cast<int>(rng() % 512 + 1);
    }
    return request;
}

/// Valid randomized streamed-chunk sequence: content and tool-call fragments,
/// exactly one finish_reason in the final chunk.
inline std::vector<fogllm::wire::StreamChunk> random_chunk_sequence(std::mt19937& rng) {
    using fogllm::wire::StreamChunk;
    using fogllm::wire::ToolCallFragment;

    std::vector<StreamChunk> chunks;
    std::uniform_int_distribution<std::size_t> n_chunks(0, 8);
    std::size_t count = n_chunks(rng);

    bool tool_mode = (rng() % 4) == 0;
    std::string args_total;
    if (tool_mode) {
        nlohmann::json args = {{"key", random_word(rng)}, {"n", static_cast<int>(rng() % 100)}};
        args_total = args.dump();
    }

    if (tool_mode) {
        std::size_t fragments = 1 + rng() % 3;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < fragments; ++i) {
            std::size_t remaining = args_total.size() - pos;
            std::size_t take = (i + 1 == fragments) ? remaining
                                                    : std::min<std::size_t>(remaining, rng() % 7);
            StreamChunk chunk;
            ToolCallFragment frag;
            frag.index = 0;
            if (i == 0) {
                frag.id = "call_" + std::to_string(rng() % 1000);
                frag.name = random_word(rng, 3, 10);
            }
            frag.arguments_fragment = args_total.substr(pos, take);
            pos += take;
            chunk.delta_tool_calls.push_back(std::move(frag));
            chunks.push_back(std::move(chunk));
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            StreamChunk chunk;
            chunk.delta_content = random_text(rng, 4);
            chunks.push_back(std::move(chunk));
        }
    }

    StreamChunk final_chunk;
    final_chunk.finish_reason =
        tool_mode ? fogllm::FinishReason::tool_calls
                  : (rng() % 8 == 0 ? fogllm::FinishReason::length : fogllm::FinishReason::stop);
    chunks.push_back(std::move(final_chunk));
    return chunks;
}

/// Splits bytes into random fragments (possibly single bytes).
inline std::vector<std::string> random_fragmentation(std::mt19937& rng, const std::string& bytes,
                                                     std::size_t max_fragment = 7) {
    std::vector<std::string> fragments;
    std::uniform_int_distribution<std::size_t> len_dist(1, max_fragment);
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        std::size_t take = std::min(len_dist(rng), bytes.size() - pos);
        fragments.push_back(bytes.substr(pos, take));
        pos += take;
    }
    return fragments;
}

}  // namespace testsupport
