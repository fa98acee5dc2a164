#include "fogllm/core/schema.hpp"

namespace fogllm {

std::string to_string(LayerHint hint) {
    switch (hint) {
        case LayerHint::local: return "local";
        case LayerHint::fog: return "fog";
        case LayerHint::cloud: return "cloud";
        case LayerHint::any: return "auto";
    }
    return "auto";
}

LayerHint layer_hint_from_string(const std::string& s) {
    if (s == "local") return LayerHint::local;
    if (s == "fog") return LayerHint::fog;
    if (s == "cloud") return LayerHint::cloud;
    if (s == "auto" || s == "any") return LayerHint::any;
    throw RangeError("unknown layer hint: " + s);
}

ModelSchema::ModelSchema(std::string model_id, SamplingParams sampling, int context_window,
                         LayerHint layer_hint, PromptFormat prompt_format)
    : model_id_(std::move(model_id)),
      sampling_(sampling),
      context_window_(context_window),
      prompt_format_(prompt_format),
      layer_hint_(layer_hint) {
    if (model_id_.empty()) {
        throw RangeError("model_id must be nonempty");
    }
    if (sampling_.temperature < 0.0 || sampling_.temperature > 2.0) {
        throw RangeError("temperature must be within [0,2]");
    }
    if (sampling_.max_output_tokens <= 0) {
        throw RangeError("max_output_tokens must be positive");
    }
    if (context_window_ <= 0) {
        throw RangeError("context_window must be positive");
    }
    if (context_window_ < sampling_.max_output_tokens) {
        throw RangeError("context_window must be >= max_output_tokens");
    }
}

ModelSchema make_schema(std::string model_id, SamplingParams sampling, int context_window,
                        LayerHint layer_hint) {
    return ModelSchema(std::move(model_id), sampling, context_window, layer_hint);
}

}  // namespace fogllm
