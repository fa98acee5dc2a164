#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fogllm/core/chat.hpp"
#include "fogllm/core/platform.hpp"

namespace fogllm::wire {

/// One chat-completions request body. Only the chat subset is modeled:
/// single-choice, no embeddings, no legacy completions.
struct ChatRequest {
    std::string model;
    std::vector<Message> messages;
    double temperature = 1.0;
    bool stream = false;
    std::vector<ToolSpec> tools;      // empty -> "tools" key omitted
    std::optional<int> max_tokens;

    bool operator==(const ChatRequest&) const = default;
};

bool wire_legal_tool_name(std::string_view name);

/// Serializes with stable key ordering (model, messages, temperature, stream,
/// tools, max_tokens) so golden files are byte-reproducible. Throws
/// ValidationError naming the offending field.
std::string encode_request(const ChatRequest& request);

/// Parses a request body. Unknown fields are ignored; missing optional fields
/// take wire defaults (temperature 1.0, stream false). Throws ParseError for
/// malformed JSON and ValidationError for shape violations.
ChatRequest decode_request(std::string_view body);

/// Whole (non-streamed) completion response.
struct CompletionResponse {
    std::string id;
    std::string model;
    Message message;  // role == assistant
    FinishReason finish = FinishReason::stop;

    bool operator==(const CompletionResponse&) const = default;
};

std::string encode_response(const CompletionResponse& response);
CompletionResponse decode_response(std::string_view body);

/// OpenAI-shape models listing: {"object":"list","data":[{"id":...},...]}.
std::string encode_model_list(const std::vector<std::string>& model_ids);
std::vector<std::string> decode_model_list(std::string_view body);

}  // namespace fogllm::wire
