#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fogllm/core/schema.hpp"

namespace fogllm::local {

/// Declarative metadata for model families supported out of the box. Custom
/// GGUF models remain loadable; this table only drives default prompt
/// formats.
struct SupportedModel {
    std::string family;
    std::vector<std::string> variations;
    std::string vendor;
    PromptFormat default_prompt_format = PromptFormat::chat_markers;
};

const std::vector<SupportedModel>& supported_models();

/// Case-insensitive family lookup; nullopt marks a custom model.
std::optional<SupportedModel> find_supported_model(const std::string& family);

}  // namespace fogllm::local
