#include "fogllm/wire/stream.hpp"

#include <nlohmann/json.hpp>

namespace fogllm::wire {

using nlohmann::json;
using nlohmann::ordered_json;

std::string encode_chunk_json(const StreamChunk& chunk) {
    ordered_json delta = ordered_json::object();
    if (chunk.delta_content) {
        delta["content"] = *chunk.delta_content;
    }
    if (!chunk.delta_tool_calls.empty()) {
        ordered_json calls = ordered_json::array();
        for (const auto& frag : chunk.delta_tool_calls) {
            ordered_json c;
            c["index"] = frag.index;
            if (frag.id) c["id"] = *frag.id;
            ordered_json fn = ordered_json::object();
            if (frag.name) fn["name"] = *frag.name;
            fn["arguments"] = frag.arguments_fragment;
            c["function"] = std::move(fn);
            calls.push_back(std::move(c));
        }
        delta["tool_calls"] = std::move(calls);
    }

    ordered_json choice;
    choice["index"] = 0;
    choice["delta"] = std::move(delta);
    choice["finish_reason"] =
        chunk.finish_reason ? ordered_json(to_string(*chunk.finish_reason)) : ordered_json(nullptr);

    ordered_json out;
    out["object"] = "chat.completion.chunk";
    out["choices"] = ordered_json::array({std::move(choice)});
    return out.dump();
}

StreamChunk decode_chunk_json(std::string_view text) try {
    json j = json::parse(text);
    if (j.is_object() && j.contains("error")) {
        // Backends report mid-stream failures as in-band error events.
        const auto& err = j.at("error");
        throw BackendError(err.is_object() ? err.value("message", err.dump()) : err.dump());
    }
    StreamChunk chunk;
    if (!j.contains("choices") || j.at("choices").empty()) {
        return chunk;
    }
    const auto& choice = j.at("choices").at(0);
    if (choice.contains("delta")) {
        const auto& delta = choice.at("delta");
        if (delta.contains("content") && delta.at("content").is_string()) {
            chunk.delta_content = delta.at("content").get<std::string>();
        }
        if (delta.contains("tool_calls") && delta.at("tool_calls").is_array()) {
            for (const auto& c : delta.at("tool_calls")) {
                ToolCallFragment frag;
                frag.index = c.value("index", 0);
                if (c.contains("id") && c.at("id").is_string()) {
                    frag.id = c.at("id").get<std::string>();
                }
                if (c.contains("function")) {
                    const auto& fn = c.at("function");
                    if (fn.contains("name") && fn.at("name").is_string()) {
                        frag.name = fn.at("name").get<std::string>();
                    }
                    frag.arguments_fragment = fn.value("arguments", "");
                }
                chunk.delta_tool_calls.push_back(std::move(frag));
            }
        }
    }
    if (choice.contains("finish_reason") && choice.at("finish_reason").is_string()) {
        chunk.finish_reason = finish_reason_from_string(choice.at("finish_reason").get<std::string>());
    }
    return chunk;
} catch (const json::parse_error& e) {
    throw ParseError(std::string("bad chunk json: ") + e.what(), e.byte);
} catch (const json::exception& e) {
    throw ValidationError(std::string("bad chunk shape: ") + e.what());
}

std::string encode_sse_event(const StreamChunk& chunk) {
    return "data: " + encode_chunk_json(chunk) + "\n\n";
}

std::string encode_sse_stream(const std::vector<StreamChunk>& chunks) {
    std::string out;
    for (const auto& chunk : chunks) {
        out += encode_sse_event(chunk);
    }
    out += kSseDone;
    return out;
}

void SseParser::feed(std::string_view bytes) {
    buffer_.append(bytes);

    // Events end at a blank line. Scan for complete events only; a partial
    // line (or partial UTF-8 sequence) stays buffered untouched.
    for (;;) {
        std::size_t event_end = std::string::npos;
        std::size_t terminator_len = 0;
        std::size_t lf = buffer_.find("\n\n");
        std::size_t crlf = buffer_.find("\r\n\r\n");
        if (lf != std::string::npos && (crlf == std::string::npos || lf < crlf)) {
            event_end = lf;
            terminator_len = 2;
        } else if (crlf != std::string::npos) {
            event_end = crlf;
            terminator_len = 4;
        }
        if (event_end == std::string::npos) {
            return;
        }

        std::string event = buffer_.substr(0, event_end);
        buffer_.erase(0, event_end + terminator_len);

        // An event may span multiple lines; each must be a data line or a
        // comment.
        std::size_t pos = 0;
        while (pos < event.size()) {
            std::size_t eol = event.find('\n', pos);
            std::string_view line(event.data() + pos, (eol == std::string::npos ? event.size() : eol) - pos);
            pos = (eol == std::string::npos) ? event.size() : eol + 1;
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            if (line.empty() || line.front() == ':') {
                continue;  // comment / keep-alive
            }
            if (!line.starts_with("data:")) {
                throw StreamProtocolError("event line without data: prefix: '" +
                                          std::string(line) + "'");
            }
            std::string_view payload = line.substr(5);
            if (!payload.empty() && payload.front() == ' ') {
                payload.remove_prefix(1);
            }
            consume_event(payload);
        }
    }
}

void SseParser::consume_event(std::string_view payload) {
    if (done_) {
        throw StreamProtocolError("data after [DONE] sentinel");
    }
    if (payload == "[DONE]") {
        done_ = true;
        return;
    }
    ready_.push_back(decode_chunk_json(payload));
}

std::optional<StreamChunk> SseParser::next() {
    if (ready_.empty()) return std::nullopt;
    StreamChunk chunk = std::move(ready_.front());
    ready_.pop_front();
    return chunk;
}

void SseParser::finish() const {
    if (!done_) {
        throw TruncatedStream("stream ended before [DONE]");
    }
}

std::vector<StreamChunk> SseParser::drain() {
    std::vector<StreamChunk> chunks;
    while (auto chunk = next()) {
        chunks.push_back(std::move(*chunk));
    }
    return chunks;
}

std::vector<StreamChunk> parse_sse_stream(std::string_view bytes) {
    SseParser parser;
    parser.feed(bytes);
    parser.finish();
    return parser.drain();
}

void ChunkAssembler::add(const StreamChunk& chunk) {
    if (finish_ && (chunk.delta_content || !chunk.delta_tool_calls.empty() || chunk.finish_reason)) {
        throw StreamProtocolError("chunk after finish_reason");
    }
    if (chunk.delta_content) {
        content_ += *chunk.delta_content;
    }
    for (const auto& frag : chunk.delta_tool_calls) {
        auto& call = calls_[frag.index];
        if (frag.id) call.id = *frag.id;
        if (frag.name) call.name = *frag.name;
        call.arguments += frag.arguments_fragment;
    }
    if (chunk.finish_reason) {
        finish_ = *chunk.finish_reason;
    }
}

GenerationOutcome ChunkAssembler::result() const {
    if (!finish_) {
        throw StreamProtocolError("stream finished without finish_reason");
    }
    GenerationOutcome outcome;
    outcome.finish = *finish_;
    std::vector<ToolCallRef> calls;
    for (const auto& [index, call] : calls_) {
        if (!json::accept(call.arguments)) {
            throw StreamProtocolError("tool call " + std::to_string(index) +
                                      " arguments are not valid JSON");
        }
        calls.push_back(ToolCallRef{call.id, call.name, call.arguments});
    }
    outcome.message = assistant_message(content_, std::move(calls));
    return outcome;
}

}  // namespace fogllm::wire
