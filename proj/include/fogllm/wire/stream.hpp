#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fogllm/core/chat.hpp"
#include "fogllm/core/platform.hpp"

namespace fogllm::wire {

/// Partial tool call carried by one streamed chunk. The id and name arrive on
/// the first fragment for an index; arguments accumulate across fragments.
struct ToolCallFragment {
    int index = 0;
    std::optional<std::string> id;
    std::optional<std::string> name;
    std::string arguments_fragment;

    bool operator==(const ToolCallFragment&) const = default;
};

struct StreamChunk {
    std::optional<std::string> delta_content;
    std::vector<ToolCallFragment> delta_tool_calls;
    std::optional<FinishReason> finish_reason;

    bool operator==(const StreamChunk&) const = default;
};

std::string encode_chunk_json(const StreamChunk& chunk);
StreamChunk decode_chunk_json(std::string_view json);

/// Frames each chunk as one `data: <json>\n\n` event and appends the
/// `data: [DONE]\n\n` sentinel.
std::string encode_sse_stream(const std::vector<StreamChunk>& chunks);

std::string encode_sse_event(const StreamChunk& chunk);
inline constexpr std::string_view kSseDone = "data: [DONE]\n\n";

/// Incremental SSE parser. Feed arbitrarily fragmented bytes (mid-line and
/// mid-UTF-8 splits included); complete chunks become available in order.
/// Single-owner stateful object.
class SseParser {
public:
    /// Appends bytes and parses any events they complete. Throws
    /// StreamProtocolError on a field line that is not `data:` or a comment.
    void feed(std::string_view bytes);

    /// Next parsed chunk, if one is ready.
    std::optional<StreamChunk> next();

    /// True once the [DONE] sentinel has been consumed.
    bool done() const { return done_; }

    /// Call at end of input. Throws TruncatedStream when the stream ended
    /// before [DONE].
    void finish() const;

    /// Convenience: feed + drain, erroring when the server keeps talking past
    /// [DONE].
    std::vector<StreamChunk> drain();

private:
    void consume_event(std::string_view payload);

    std::string buffer_;
    std::deque<StreamChunk> ready_;
    bool done_ = false;
};

/// Parses a complete byte stream in one call and checks termination.
std::vector<StreamChunk> parse_sse_stream(std::string_view bytes);

/// Folds streamed chunks back into the final assistant message, enforcing the
/// exactly-once finish_reason invariant and validating that reassembled tool
/// arguments form valid JSON.
class ChunkAssembler {
public:
    /// Throws StreamProtocolError on a second finish_reason.
    void add(const StreamChunk& chunk);

    bool finished() const { return finish_.has_value(); }

    /// Final outcome. Throws StreamProtocolError when no finish_reason was
    /// seen or tool arguments do not reassemble to valid JSON.
    GenerationOutcome result() const;

    const std::string& content() const { return content_; }

private:
    struct PendingCall {
        std::string id;
        std::string name;
        std::string arguments;
    };

    std::string content_;
    std::map<int, PendingCall> calls_;
    std::optional<FinishReason> finish_;
};

}  // namespace fogllm::wire
