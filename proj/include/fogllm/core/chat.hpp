#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fogllm/errors.hpp"

namespace fogllm {

enum class Role { system, user, assistant, tool };

std::string to_string(Role role);
Role role_from_string(const std::string& s);

/// One tool invocation requested by the model: id, function name, and the
/// arguments exactly as they appeared on the wire (JSON text).
struct ToolCallRef {
    std::string call_id;
    std::string function_name;
    std::string arguments_json;

    bool operator==(const ToolCallRef&) const = default;
};

struct Message {
    Role role = Role::user;
    std::string content;
    std::vector<ToolCallRef> tool_calls;  // assistant messages only
    std::string tool_call_id;             // tool messages only

    bool operator==(const Message&) const = default;
};

Message system_message(std::string content);
Message user_message(std::string content);
Message assistant_message(std::string content, std::vector<ToolCallRef> tool_calls = {});
Message tool_message(std::string tool_call_id, std::string content);

/// Declarative description of one function exposed to the model, in the
/// provider-agnostic form every platform serializes identically.
struct ToolSpec {
    std::string name;
    std::string description;
    std::string parameters_json;  // JSON-schema object, canonical text

    bool operator==(const ToolSpec&) const = default;
};

/// Ordered chat transcript. Appends validate the role invariants; the first
/// pinned_prefix_len messages are never dropped by trimming.
class ChatContext {
public:
    ChatContext() = default;

    /// Throws ValidationError when the message violates a role invariant
    /// (tool_calls on a non-assistant message, tool_call_id mismatch).
    void append(Message message);

    const std::vector<Message>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const Message& at(std::size_t i) const { return entries_.at(i); }

    std::size_t pinned_prefix_len() const { return pinned_prefix_len_; }

    /// Marks the first n messages as never-trimmed. Throws RangeError when n
    /// exceeds the current length.
    void pin_prefix(std::size_t n);

    bool operator==(const ChatContext&) const = default;

private:
    std::vector<Message> entries_;
    std::size_t pinned_prefix_len_ = 0;
};

}  // namespace fogllm
