#include "fogllm/tools/engine.hpp"

#include <future>

namespace fogllm::tools {

namespace {

ToolCallOutcome run_one(const ToolRegistry& registry, const ToolCallRef& call) {
    ToolCallOutcome outcome;
    outcome.call_id = call.call_id;
    outcome.function_name = call.function_name;

    const ToolDefinition* def = registry.find(call.function_name);
    if (!def) {
        outcome.status = OutcomeStatus::validation_error;
        outcome.detail = "unknown tool";
        outcome.result_text = "error: unknown tool '" + call.function_name + "'";
        return outcome;
    }

    ValidatedArguments args;
    try {
        args = validate_arguments(*def, call.arguments_json);
    } catch (const ValidationError& e) {
        outcome.status = OutcomeStatus::validation_error;
        outcome.detail = e.what();
        outcome.result_text = std::string("error: invalid arguments: ") + e.what();
        return outcome;
    }

    try {
        nlohmann::json result = def->handler(args);
        outcome.result_text = result.is_string() ? result.get<std::string>() : result.dump();
        outcome.status = OutcomeStatus::ok;
    } catch (const std::exception& e) {
        outcome.status = OutcomeStatus::handler_error;
        outcome.detail = e.what();
        outcome.result_text = std::string("error: ") + e.what();
    } catch (...) {
        outcome.status = OutcomeStatus::handler_error;
        outcome.detail = "unknown handler failure";
        outcome.result_text = "error: unknown handler failure";
    }
    return outcome;
}

}  // namespace

std::vector<ToolCallOutcome> execute_calls(const ToolRegistry& registry,
                                           const std::vector<ToolCallRef>& requested_calls) {
    if (requested_calls.empty()) return {};
    if (requested_calls.size() == 1) {
        return {run_one(registry, requested_calls[0])};
    }

    // One worker per call; futures join in request-index order, so the
    // outcome order is independent of completion timing.
    std::vector<std::future<ToolCallOutcome>> futures;
    futures.reserve(requested_calls.size());
    for (const auto& call : requested_calls) {
        futures.push_back(std::async(std::launch::async,
                                     [&registry, &call] { return run_one(registry, call); }));
    }
    std::vector<ToolCallOutcome> outcomes;
    outcomes.reserve(futures.size());
    for (auto& f : futures) {
        outcomes.push_back(f.get());
    }
    return outcomes;
}

Message run_turn(InferenceSession& session, const ToolRegistry& registry,
                 const std::string& user_message, const RunTurnOptions& options) {
    const std::vector<ToolSpec> specs = registry.wire_specs();

    std::optional<Message> next_input = fogllm::user_message(user_message);
    for (std::size_t round = 0; round <= options.max_rounds; ++round) {
        GenerationOutcome outcome =
            session.generate(std::move(next_input), specs, options.on_delta);
        next_input.reset();

        if (outcome.finish != FinishReason::tool_calls) {
            return outcome.message;
        }
        if (round == options.max_rounds) {
            break;
        }

        auto results = execute_calls(registry, outcome.message.tool_calls);
        for (const auto& result : results) {
            session.append(tool_message(result.call_id, result.result_text));
        }
    }
    throw ToolLoopExceeded("model kept requesting tools after " +
                           std::to_string(options.max_rounds) + " rounds");
}

}  // namespace fogllm::tools
