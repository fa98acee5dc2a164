#include "fogllm/core/chat.hpp"

namespace fogllm {

std::string to_string(Role role) {
    switch (role) {
        case Role::system: return "system";
        case Role::user: return "user";
        case Role::assistant: return "assistant";
        case Role::tool: return "tool";
    }
    return "user";
}

Role role_from_string(const std::string& s) {
    if (s == "system") return Role::system;
    if (s == "user") return Role::user;
    if (s == "assistant") return Role::assistant;
    if (s == "tool") return Role::tool;
    throw ValidationError("unknown role: " + s);
}

Message system_message(std::string content) {
    return Message{Role::system, std::move(content), {}, {}};
}

Message user_message(std::string content) {
    return Message{Role::user, std::move(content), {}, {}};
}

Message assistant_message(std::string content, std::vector<ToolCallRef> tool_calls) {
    return Message{Role::assistant, std::move(content), std::move(tool_calls), {}};
}

Message tool_message(std::string tool_call_id, std::string content) {
    return Message{Role::tool, std::move(content), {}, std::move(tool_call_id)};
}

void ChatContext::append(Message message) {
    if (!message.tool_calls.empty() && message.role != Role::assistant) {
        throw ValidationError("tool_calls only allowed on assistant messages");
    }
    if (message.role == Role::tool && message.tool_call_id.empty()) {
        throw ValidationError("tool message requires tool_call_id");
    }
    if (message.role != Role::tool && !message.tool_call_id.empty()) {
        throw ValidationError("tool_call_id only allowed on tool messages");
    }
    entries_.push_back(std::move(message));
}

void ChatContext::pin_prefix(std::size_t n) {
    if (n > entries_.size()) {
        throw RangeError("pinned prefix exceeds context length");
    }
    pinned_prefix_len_ = n;
}

}  // namespace fogllm
