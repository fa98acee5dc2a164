#include "fogllm/core/platform.hpp"

namespace fogllm {

std::string to_string(LayerKind kind) {
    switch (kind) {
        case LayerKind::local: return "local";
        case LayerKind::fog: return "fog";
        case LayerKind::cloud: return "cloud";
    }
    return "local";
}

LayerKind layer_kind_from_string(const std::string& s) {
    if (s == "local") return LayerKind::local;
    if (s == "fog") return LayerKind::fog;
    if (s == "cloud") return LayerKind::cloud;
    throw RangeError("unknown layer kind: " + s);
}

int trust_tier_for(LayerKind kind) {
    switch (kind) {
        case LayerKind::local: return 3;
        case LayerKind::fog: return 2;
        case LayerKind::cloud: return 1;
    }
    return 1;
}

PlatformDescriptor PlatformDescriptor::make(LayerKind kind, int capability_score,
                                            std::string endpoint) {
    return PlatformDescriptor{kind, trust_tier_for(kind), capability_score, std::move(endpoint)};
}

std::string to_string(FinishReason reason) {
    switch (reason) {
        case FinishReason::stop: return "stop";
        case FinishReason::tool_calls: return "tool_calls";
        case FinishReason::length: return "length";
    }
    return "stop";
}

FinishReason finish_reason_from_string(const std::string& s) {
    if (s == "stop") return FinishReason::stop;
    if (s == "tool_calls") return FinishReason::tool_calls;
    if (s == "length") return FinishReason::length;
    throw ValidationError("unknown finish_reason: " + s);
}

}  // namespace fogllm
