#include "fogllm/local/models.hpp"

#include <cctype>

namespace fogllm::local {

const std::vector<SupportedModel>& supported_models() {
    static const std::vector<SupportedModel> table = {
        {"Llama2", {"7B", "13B", "70B"}, "Meta Platforms", PromptFormat::chat_markers},
        {"Gemma", {"2B", "7B"}, "Google", PromptFormat::chat_markers},
        {"Phi-2", {"3B"}, "Microsoft", PromptFormat::raw},
    };
    return table;
}

std::optional<SupportedModel> find_supported_model(const std::string& family) {
    auto lower = [](const std::string& s) {
        std::string out = s;
        for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return out;
    };
    const std::string needle = lower(family);
    for (const auto& model : supported_models()) {
        if (lower(model.family) == needle) return model;
    }
    return std::nullopt;
}

}  // namespace fogllm::local
