#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fogllm/core/platform.hpp"

namespace fogllm::dispatch {

struct DispatchRule {
    std::string task_class;
    int min_trust_tier = 1;
    int min_capability = 0;

    bool operator==(const DispatchRule&) const = default;
};

/// Trust-and-capability routing policy. Rules are per task class (at most one
/// each); fallback_chain orders layer kinds for downgrade resolution and only
/// applies when allow_downgrade is set — there is never a silent downgrade.
struct DispatchPolicy {
    std::vector<DispatchRule> rules;
    std::vector<LayerKind> fallback_chain = {LayerKind::local, LayerKind::fog, LayerKind::cloud};
    bool allow_downgrade = false;

    const DispatchRule* find_rule(const std::string& task_class) const;

    /// Throws ValidationError for duplicate task classes or repeated
    /// fallback entries.
    void validate() const;
};

DispatchPolicy policy_from_json(const std::string& json_text);
DispatchPolicy policy_from_file(const std::string& path);
std::string policy_to_json(const DispatchPolicy& policy);

/// Picks the platform for a task class: among platforms meeting the rule's
/// trust and capability minimums, highest trust tier wins, then highest
/// capability, then fallback-chain position, then endpoint string. When
/// nothing qualifies: NoQualifiedPlatform if downgrades are disallowed,
/// otherwise the first available platform in fallback-chain order. Throws
/// UnknownTaskClass when the policy has no rule for task_class.
std::shared_ptr<Platform> dispatch(const DispatchPolicy& policy, const std::string& task_class,
                                   const std::vector<std::shared_ptr<Platform>>& inventory);

}  // namespace fogllm::dispatch
