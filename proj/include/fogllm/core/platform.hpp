#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fogllm/core/chat.hpp"
#include "fogllm/core/schema.hpp"

namespace fogllm {

enum class LayerKind { local, fog, cloud };

std::string to_string(LayerKind kind);
LayerKind layer_kind_from_string(const std::string& s);

/// Trust is fixed by layer: local 3, fog 2, cloud 1.
int trust_tier_for(LayerKind kind);

/// One execution layer instance as seen by the runner and the dispatcher.
struct PlatformDescriptor {
    LayerKind kind = LayerKind::local;
    int trust_tier = 3;
    int capability_score = 0;
    std::string endpoint;  // empty for in-process platforms

    static PlatformDescriptor make(LayerKind kind, int capability_score = 0,
                                   std::string endpoint = {});

    bool operator==(const PlatformDescriptor&) const = default;
};

enum class FinishReason { stop, tool_calls, length };

std::string to_string(FinishReason reason);
FinishReason finish_reason_from_string(const std::string& s);

struct GenerationOutcome {
    Message message;  // role == assistant
    FinishReason finish = FinishReason::stop;
};

using DeltaCallback = std::function<void(std::string_view)>;

/// An LLM execution environment. Implementations must be safe to call from
/// multiple sessions concurrently; any serialization they need (e.g. the
/// local single-job gate) is handled internally.
class Platform {
public:
    virtual ~Platform() = default;

    virtual const PlatformDescriptor& descriptor() const = 0;

    /// Runs one generation over the given context. Streams text deltas through
    /// on_delta (may be empty); the returned message content equals the
    /// concatenation of all deltas. Throws BackendError on failure.
    virtual GenerationOutcome generate(const ModelSchema& schema, const ChatContext& context,
                                       const std::vector<ToolSpec>& tools,
                                       const DeltaCallback& on_delta) = 0;
};

}  // namespace fogllm
