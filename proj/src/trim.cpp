#include "fogllm/core/trim.hpp"

#include <cctype>

namespace fogllm {

namespace {

std::size_t count_words(std::string_view text) {
    std::size_t count = 0;
    bool in_word = false;
    for (unsigned char c : text) {
        if (std::isspace(c)) {
            in_word = false;
        } else if (!in_word) {
            in_word = true;
            ++count;
        }
    }
    return count;
}

}  // namespace

TokenCounter word_count_tokenizer() {
    return [](const Message& m) {
        std::size_t total = count_words(m.content);
        for (const auto& call : m.tool_calls) {
            total += count_words(call.function_name) + count_words(call.arguments_json);
        }
        return total;
    };
}

std::size_t context_token_total(const ChatContext& context, const TokenCounter& counter) {
    std::size_t total = 0;
    for (const auto& m : context.entries()) total += counter(m);
    return total;
}

ChatContext context_trim(const ChatContext& context, std::size_t window_budget,
                         const TokenCounter& counter) {
    const auto& entries = context.entries();
    const std::size_t pinned = context.pinned_prefix_len();

    std::size_t pinned_total = 0;
    for (std::size_t i = 0; i < pinned; ++i) pinned_total += counter(entries[i]);
    if (pinned_total > window_budget) {
        throw BudgetTooSmall("pinned prefix (" + std::to_string(pinned_total) +
                             " tokens) exceeds budget (" + std::to_string(window_budget) + ")");
    }

    std::size_t total = pinned_total;
    for (std::size_t i = pinned; i < entries.size(); ++i) total += counter(entries[i]);

    // Drop oldest non-pinned messages until the context fits.
    std::size_t first_kept = pinned;
    while (total > window_budget && first_kept < entries.size()) {
        total -= counter(entries[first_kept]);
        ++first_kept;
    }

    ChatContext trimmed;
    for (std::size_t i = 0; i < pinned; ++i) trimmed.append(entries[i]);
    for (std::size_t i = first_kept; i < entries.size(); ++i) trimmed.append(entries[i]);
    trimmed.pin_prefix(pinned);
    return trimmed;
}

}  // namespace fogllm
