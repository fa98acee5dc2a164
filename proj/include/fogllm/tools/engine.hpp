#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fogllm/core/session.hpp"
#include "fogllm/tools/registry.hpp"

namespace fogllm::tools {

/// Runs every requested call concurrently (independent workers, join
/// barrier) and returns one outcome per call in ascending call-index order,
/// regardless of completion order. A failing or unknown handler never aborts
/// its siblings; failures are embedded in the outcome.
std::vector<ToolCallOutcome> execute_calls(const ToolRegistry& registry,
                                           const std::vector<ToolCallRef>& requested_calls);

struct RunTurnOptions {
    std::size_t max_rounds = 8;
    DeltaCallback on_delta;
};

/// The function-calling loop: generate; while the model requests tools,
/// execute them, append one tool message per outcome (call-index order) and
/// regenerate. Returns the final assistant message. Throws ToolLoopExceeded
/// after max_rounds tool rounds and propagates BackendError.
Message run_turn(InferenceSession& session, const ToolRegistry& registry,
                 const std::string& user_message, const RunTurnOptions& options = {});

}  // namespace fogllm::tools
