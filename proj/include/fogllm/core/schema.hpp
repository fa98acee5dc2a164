#pragma once

#include <optional>
#include <string>

#include "fogllm/errors.hpp"

namespace fogllm {

enum class PromptFormat { chat_markers, raw };

/// Preferred execution layer for sessions built from a schema. `any` matches
/// every registered platform.
enum class LayerHint { local, fog, cloud, any };

std::string to_string(LayerHint hint);
LayerHint layer_hint_from_string(const std::string& s);

struct SamplingParams {
    double temperature = 0.7;
    int max_output_tokens = 256;

    bool operator==(const SamplingParams&) const = default;
};

/// Immutable blueprint of one model configuration. All fields are frozen at
/// construction; schemas built from equal inputs compare equal.
class ModelSchema {
public:
    /// Throws RangeError for temperature outside [0,2], non-positive sizes,
    /// or context_window < max_output_tokens.
    ModelSchema(std::string model_id, SamplingParams sampling, int context_window,
                LayerHint layer_hint = LayerHint::any,
                PromptFormat prompt_format = PromptFormat::chat_markers);

    const std::string& model_id() const { return model_id_; }
    double temperature() const { return sampling_.temperature; }
    int max_output_tokens() const { return sampling_.max_output_tokens; }
    int context_window() const { return context_window_; }
    PromptFormat prompt_format() const { return prompt_format_; }
    LayerHint layer_hint() const { return layer_hint_; }

    bool operator==(const ModelSchema&) const = default;

private:
    std::string model_id_;
    SamplingParams sampling_;
    int context_window_;
    PromptFormat prompt_format_;
    LayerHint layer_hint_;
};

ModelSchema make_schema(std::string model_id, SamplingParams sampling = {},
                        int context_window = 4096, LayerHint layer_hint = LayerHint::any);

}  // namespace fogllm
