#include "fogllm/wire/request.hpp"

#include <nlohmann/json.hpp>

namespace fogllm::wire {

using nlohmann::json;
using nlohmann::ordered_json;

bool wire_legal_tool_name(std::string_view name) {
    if (name.empty() || name.size() > 64) return false;
    for (char c : name) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '-';
        if (!ok) return false;
    }
    return true;
}

namespace {

ordered_json message_to_json(const Message& m) {
    ordered_json out;
    out["role"] = to_string(m.role);
    out["content"] = m.content;
    if (!m.tool_calls.empty()) {
        ordered_json calls = ordered_json::array();
        for (const auto& call : m.tool_calls) {
            ordered_json c;
            c["id"] = call.call_id;
            c["type"] = "function";
            c["function"]["name"] = call.function_name;
            c["function"]["arguments"] = call.arguments_json;
            calls.push_back(std::move(c));
        }
        out["tool_calls"] = std::move(calls);
    }
    if (m.role == Role::tool) {
        out["tool_call_id"] = m.tool_call_id;
    }
    return out;
}

Message message_from_json(const json& j) {
    if (!j.is_object() || !j.contains("role")) {
        throw ValidationError("message must be an object with a role");
    }
    Message m;
    m.role = role_from_string(j.at("role").get<std::string>());
    if (j.contains("content") && j.at("content").is_string()) {
        m.content = j.at("content").get<std::string>();
    }
    if (j.contains("tool_calls") && !j.at("tool_calls").is_null()) {
        if (m.role != Role::assistant) {
            throw ValidationError("tool_calls only allowed on assistant messages");
        }
        for (const auto& c : j.at("tool_calls")) {
            ToolCallRef call;
            call.call_id = c.value("id", "");
            const auto& fn = c.at("function");
            call.function_name = fn.value("name", "");
            call.arguments_json = fn.value("arguments", "");
            m.tool_calls.push_back(std::move(call));
        }
    }
    if (j.contains("tool_call_id") && j.at("tool_call_id").is_string()) {
        m.tool_call_id = j.at("tool_call_id").get<std::string>();
    }
    if (m.role == Role::tool && m.tool_call_id.empty()) {
        throw ValidationError("tool message requires tool_call_id");
    }
    if (m.role != Role::tool && !m.tool_call_id.empty()) {
        throw ValidationError("tool_call_id only allowed on tool messages");
    }
    return m;
}

json parse_json(std::string_view body) {
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
}

}  // namespace

std::string encode_request(const ChatRequest& request) {
    if (request.model.empty()) {
        throw ValidationError("model must be nonempty");
    }
    if (request.messages.empty()) {
        throw ValidationError("messages must be nonempty");
    }
    for (const auto& tool : request.tools) {
        if (!wire_legal_tool_name(tool.name)) {
            throw ValidationError("tool name not wire-legal: '" + tool.name + "'");
        }
    }

    ordered_json out;
    out["model"] = request.model;
    ordered_json messages = ordered_json::array();
    for (const auto& m : request.messages) {
        messages.push_back(message_to_json(m));
    }
    out["messages"] = std::move(messages);
    out["temperature"] = request.temperature;
    out["stream"] = request.stream;
    if (!request.tools.empty()) {
        ordered_json tools = ordered_json::array();
        for (const auto& tool : request.tools) {
            ordered_json t;
            t["type"] = "function";
            t["function"]["name"] = tool.name;
            t["function"]["description"] = tool.description;
            t["function"]["parameters"] = parse_json(tool.parameters_json);
            tools.push_back(std::move(t));
        }
        out["tools"] = std::move(tools);
    }
    if (request.max_tokens) {
        out["max_tokens"] = *request.max_tokens;
    }
    return out.dump();
}

ChatRequest decode_request(std::string_view body) try {
    json j = parse_json(body);
    if (!j.is_object()) {
        throw ValidationError("request body must be a JSON object");
    }

    ChatRequest request;
    if (!j.contains("model") || !j.at("model").is_string()) {
        throw ValidationError("model is required");
    }
    request.model = j.at("model").get<std::string>();

    if (!j.contains("messages") || !j.at("messages").is_array() || j.at("messages").empty()) {
        throw ValidationError("messages must be a nonempty array");
    }
    for (const auto& m : j.at("messages")) {
        request.messages.push_back(message_from_json(m));
    }

    request.temperature = j.value("temperature", 1.0);
    request.stream = j.value("stream", false);

    if (j.contains("tools") && !j.at("tools").is_null()) {
        for (const auto& t : j.at("tools")) {
            ToolSpec spec;
            const auto& fn = t.at("function");
            spec.name = fn.value("name", "");
            spec.description = fn.value("description", "");
            spec.parameters_json = fn.contains("parameters") ? fn.at("parameters").dump() : "{}";
            if (!wire_legal_tool_name(spec.name)) {
                throw ValidationError("tool name not wire-legal: '" + spec.name + "'");
            }
            request.tools.push_back(std::move(spec));
        }
    }
    if (j.contains("max_tokens") && j.at("max_tokens").is_number_integer()) {
        request.max_tokens = j.at("max_tokens").get<int>();
    }
    return request;
} catch (const json::exception& e) {
    throw ValidationError(std::string("malformed request shape: ") + e.what());
}

std::string encode_response(const CompletionResponse& response) {
    ordered_json out;
    out["id"] = response.id;
    out["object"] = "chat.completion";
    out["model"] = response.model;
    ordered_json choice;
    choice["index"] = 0;
    choice["message"] = message_to_json(response.message);
    choice["finish_reason"] = to_string(response.finish);
    out["choices"] = ordered_json::array({std::move(choice)});
    return out.dump();
}

CompletionResponse decode_response(std::string_view body) try {
    json j = parse_json(body);
    CompletionResponse response;
    response.id = j.value("id", "");
    response.model = j.value("model", "");
    if (!j.contains("choices") || !j.at("choices").is_array() || j.at("choices").empty()) {
        throw ValidationError("response requires a nonempty choices array");
    }
    const auto& choice = j.at("choices").at(0);
    response.message = message_from_json(choice.at("message"));
    response.finish = finish_reason_from_string(choice.value("finish_reason", "stop"));
    return response;
} catch (const json::exception& e) {
    throw ValidationError(std::string("malformed response shape: ") + e.what());
}

std::string encode_model_list(const std::vector<std::string>& model_ids) {
    ordered_json out;
    out["object"] = "list";
    ordered_json data = ordered_json::array();
    for (const auto& id : model_ids) {
        ordered_json entry;
        entry["id"] = id;
        entry["object"] = "model";
        data.push_back(std::move(entry));
    }
    out["data"] = std::move(data);
    return out.dump();
}

std::vector<std::string> decode_model_list(std::string_view body) try {
    json j = parse_json(body);
    std::vector<std::string> ids;
    for (const auto& entry : j.at("data")) {
        ids.push_back(entry.at("id").get<std::string>());
    }
    return ids;
} catch (const json::exception& e) {
    throw ValidationError(std::string("malformed model list: ") + e.what());
}

}  // namespace fogllm::wire
