#include "fogllm/tools/registry.hpp"

#include "fogllm/wire/request.hpp"

namespace fogllm::tools {

using nlohmann::json;

std::string to_string(OutcomeStatus status) {
    switch (status) {
        case OutcomeStatus::ok: return "ok";
        case OutcomeStatus::handler_error: return "handler_error";
        case OutcomeStatus::validation_error: return "validation_error";
    }
    return "ok";
}

namespace {

bool type_matches(const std::string& type, const json& value) {
    if (type == "string") return value.is_string();
    if (type == "number") return value.is_number();
    if (type == "integer") return value.is_number_integer();
    if (type == "boolean") return value.is_boolean();
    if (type == "array") return value.is_array();
    if (type == "object") return value.is_object();
    if (type == "null") return value.is_null();
    return false;
}

std::string join_path(const std::string& base, const std::string& key) {
    return base.empty() ? key : base + "." + key;
}

}  // namespace

void check_against_schema(const json& schema, const json& value, const std::string& path) {
    if (schema.contains("enum")) {
        for (const auto& allowed : schema.at("enum")) {
            if (value == allowed) return;
        }
        throw ValidationError(path.empty() ? "value not in enum" : path + ": value not in enum");
    }

    const std::string type = schema.value("type", "object");
    if (!type_matches(type, value)) {
        throw ValidationError((path.empty() ? std::string("arguments") : path) + ": expected " +
                              type);
    }

    if (type == "object") {
        const json properties = schema.value("properties", json::object());
        if (schema.contains("required")) {
            for (const auto& req : schema.at("required")) {
                const std::string key = req.get<std::string>();
                if (!value.contains(key)) {
                    throw ValidationError(join_path(path, key) + ": required property missing");
                }
            }
        }
        for (const auto& [key, sub] : value.items()) {
            if (properties.contains(key)) {
                check_against_schema(properties.at(key), sub, join_path(path, key));
            }
            // Unknown properties pass through; providers add fields freely.
        }
    } else if (type == "array" && schema.contains("items")) {
        std::size_t i = 0;
        for (const auto& item : value) {
            check_against_schema(schema.at("items"), item, path + "[" + std::to_string(i) + "]");
            ++i;
        }
    }
}

ValidatedArguments validate_arguments(const ToolDefinition& definition,
                                      const std::string& arguments_json) {
    json parsed;
    try {
        parsed = json::parse(arguments_json.empty() ? "{}" : arguments_json);
    } catch (const json::parse_error& e) {
        throw ValidationError("arguments are not valid JSON: " + std::string(e.what()));
    }
    const json schema =
        definition.parameters.is_null() ? json::object() : definition.parameters;
    check_against_schema(schema, parsed, "");
    return parsed;
}

void ToolRegistry::add(ToolDefinition definition) {
    if (!wire::wire_legal_tool_name(definition.name)) {
        throw ValidationError("tool name not wire-legal: '" + definition.name + "'");
    }
    if (by_name_.count(definition.name)) {
        throw DuplicateTool("tool already registered: '" + definition.name + "'");
    }
    if (definition.parameters.is_null()) {
        definition.parameters = nlohmann::json::object();
    }
    if (definition.parameters.contains("required")) {
        const auto properties =
            definition.parameters.value("properties", nlohmann::json::object());
        for (const auto& req : definition.parameters.at("required")) {
            const std::string key = req.get<std::string>();
            if (!properties.contains(key)) {
                throw ValidationError("required property '" + key + "' not declared in properties");
            }
        }
    }
    by_name_[definition.name] = definitions_.size();
    definitions_.push_back(std::move(definition));
}

const ToolDefinition* ToolRegistry::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return nullptr;
    return &definitions_[it->second];
}

std::vector<ToolSpec> ToolRegistry::wire_specs() const {
    std::vector<ToolSpec> specs;
    specs.reserve(definitions_.size());
    for (const auto& def : definitions_) {
        specs.push_back(ToolSpec{def.name, def.description, def.parameters.dump()});
    }
    return specs;
}

}  // namespace fogllm::tools
