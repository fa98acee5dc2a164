#pragma once

#include <cstddef>
#include <functional>

#include "fogllm/core/chat.hpp"

namespace fogllm {

/// Counts the tokens a message occupies in the context window. The default
/// counter is whitespace-delimited word count over the message content plus
/// tool-call argument text; exactness is not part of the trimming contract.
using TokenCounter = std::function<std::size_t(const Message&)>;

TokenCounter word_count_tokenizer();

std::size_t context_token_total(const ChatContext& context, const TokenCounter& counter);

/// Drops whole non-pinned messages oldest-first until the total token count
/// fits window_budget. The pinned prefix and relative order are preserved;
/// idempotent. Throws BudgetTooSmall when the pinned prefix alone exceeds the
/// budget.
ChatContext context_trim(const ChatContext& context, std::size_t window_budget,
                         const TokenCounter& counter = word_count_tokenizer());

}  // namespace fogllm
