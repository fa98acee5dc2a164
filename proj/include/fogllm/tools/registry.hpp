#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fogllm/core/chat.hpp"

namespace fogllm::tools {

/// Arguments after schema validation, typed as parsed JSON.
using ValidatedArguments = nlohmann::json;

/// Handler result: either plain text or a structured value serialized to
/// canonical JSON before hitting the wire.
using ToolHandler = std::function<nlohmann::json(const ValidatedArguments&)>;

/// Declarative function exposed to the model. The parameter schema is the
/// JSON-schema subset: primitive types, enums, arrays, and one nesting level
/// of objects.
struct ToolDefinition {
    std::string name;
    std::string description;
    nlohmann::json parameters;  // JSON-schema object
    ToolHandler handler;
};

enum class OutcomeStatus { ok, handler_error, validation_error };

std::string to_string(OutcomeStatus status);

struct ToolCallOutcome {
    std::string call_id;
    std::string function_name;
    std::string result_text;
    OutcomeStatus status = OutcomeStatus::ok;
    std::string detail;  // set for handler_error / validation_error
};

/// Validates arguments_json against the definition's parameter schema and
/// returns them typed. Throws ValidationError naming the first offending
/// path.
ValidatedArguments validate_arguments(const ToolDefinition& definition,
                                      const std::string& arguments_json);

/// Standalone schema check used by validate_arguments; path is the location
/// prefix for error messages.
void check_against_schema(const nlohmann::json& schema, const nlohmann::json& value,
                          const std::string& path);

class ToolRegistry {
public:
    /// Throws DuplicateTool when the name is taken and ValidationError when
    /// the name is not wire-legal or the schema is malformed (a required
    /// property missing from properties).
    void add(ToolDefinition definition);

    const ToolDefinition* find(const std::string& name) const;
    std::size_t size() const { return definitions_.size(); }
    bool empty() const { return definitions_.empty(); }

    /// Provider-agnostic wire specs, ordered by registration.
    std::vector<ToolSpec> wire_specs() const;

private:
    std::vector<ToolDefinition> definitions_;
    std::map<std::string, std::size_t> by_name_;
};

}  // namespace fogllm::tools
