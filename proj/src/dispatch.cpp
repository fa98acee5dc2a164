#include "fogllm/dispatch/policy.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fogllm::dispatch {

using nlohmann::json;
using nlohmann::ordered_json;

const DispatchRule* DispatchPolicy::find_rule(const std::string& task_class) const {
    for (const auto& rule : rules) {
        if (rule.task_class == task_class) return &rule;
    }
    return nullptr;
}

void DispatchPolicy::validate() const {
    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (std::size_t j = i + 1; j < rules.size(); ++j) {
            if (rules[i].task_class == rules[j].task_class) {
                throw ValidationError("duplicate rule for task class '" + rules[i].task_class +
                                      "'");
            }
        }
    }
    for (std::size_t i = 0; i < fallback_chain.size(); ++i) {
        for (std::size_t j = i + 1; j < fallback_chain.size(); ++j) {
            if (fallback_chain[i] == fallback_chain[j]) {
                throw ValidationError("fallback_chain entries must be unique");
            }
        }
    }
}

DispatchPolicy policy_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("bad policy json: ") + e.what());
    }

    DispatchPolicy policy;
    if (j.contains("rules")) {
        for (const auto& r : j.at("rules")) {
            DispatchRule rule;
            rule.task_class = r.at("task_class").get<std::string>();
            rule.min_trust_tier = r.value("min_trust_tier", 1);
            rule.min_capability = r.value("min_capability", 0);
            policy.rules.push_back(std::move(rule));
        }
    }
    if (j.contains("fallback_chain")) {
        policy.fallback_chain.clear();
        for (const auto& k : j.at("fallback_chain")) {
            policy.fallback_chain.push_back(layer_kind_from_string(k.get<std::string>()));
        }
    }
    policy.allow_downgrade = j.value("allow_downgrade", false);
    policy.validate();
    return policy;
}

DispatchPolicy policy_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read policy file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return policy_from_json(buffer.str());
}

std::string policy_to_json(const DispatchPolicy& policy) {
    ordered_json out;
    ordered_json rules = ordered_json::array();
    for (const auto& rule : policy.rules) {
        ordered_json r;
        r["task_class"] = rule.task_class;
        r["min_trust_tier"] = rule.min_trust_tier;
        r["min_capability"] = rule.min_capability;
        rules.push_back(std::move(r));
    }
    out["rules"] = std::move(rules);
    ordered_json chain = ordered_json::array();
    for (LayerKind kind : policy.fallback_chain) {
        chain.push_back(to_string(kind));
    }
    out["fallback_chain"] = std::move(chain);
    out["allow_downgrade"] = policy.allow_downgrade;
    return out.dump(2);
}

namespace {

int chain_position(const DispatchPolicy& policy, LayerKind kind) {
    for (std::size_t i = 0; i < policy.fallback_chain.size(); ++i) {
        if (policy.fallback_chain[i] == kind) return static_cast<int>(i);
    }
    return static_cast<int>(policy.fallback_chain.size());
}

}  // namespace

std::shared_ptr<Platform> dispatch(const DispatchPolicy& policy, const std::string& task_class,
                                   const std::vector<std::shared_ptr<Platform>>& inventory) {
    const DispatchRule* rule = policy.find_rule(task_class);
    if (!rule) {
        throw UnknownTaskClass("no dispatch rule for task class '" + task_class + "'");
    }

    auto better = [&](const std::shared_ptr<Platform>& a, const std::shared_ptr<Platform>& b) {
        const auto& da = a->descriptor();
        const auto& db = b->descriptor();
        if (da.trust_tier != db.trust_tier) return da.trust_tier > db.trust_tier;
        if (da.capability_score != db.capability_score) {
            return da.capability_score > db.capability_score;
        }
        int pa = chain_position(policy, da.kind);
        int pb = chain_position(policy, db.kind);
        if (pa != pb) return pa < pb;
        return da.endpoint < db.endpoint;
    };

    std::shared_ptr<Platform> best;
    for (const auto& platform : inventory) {
        const auto& d = platform->descriptor();
        if (d.trust_tier < rule->min_trust_tier) continue;
        if (d.capability_score < rule->min_capability) continue;
        if (!best || better(platform, best)) {
            best = platform;
        }
    }
    if (best) {
        return best;
    }

    if (!policy.allow_downgrade) {
        throw NoQualifiedPlatform("no platform meets trust>=" +
                                  std::to_string(rule->min_trust_tier) + " capability>=" +
                                  std::to_string(rule->min_capability) + " for task '" +
                                  task_class + "'");
    }

    // Explicitly allowed downgrade: first available kind in chain order.
    for (LayerKind kind : policy.fallback_chain) {
        for (const auto& platform : inventory) {
            if (platform->descriptor().kind == kind) {
                return platform;
            }
        }
    }
    throw NoQualifiedPlatform("inventory is empty");
}

}  // namespace fogllm::dispatch
