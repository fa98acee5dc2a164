#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "fogllm/core/platform.hpp"
#include "fogllm/core/schema.hpp"
#include "fogllm/core/session.hpp"

namespace fogllm {

/// Central dispatcher: holds the platform inventory and binds new sessions to
/// a platform. Safe for concurrent registration and session creation.
class Runner {
public:
    /// Adds a platform to the inventory. A platform with the same
    /// (kind, endpoint) replaces the existing entry instead of doubling it.
    void register_platform(std::shared_ptr<Platform> platform);

    std::vector<std::shared_ptr<Platform>> platforms() const;

    /// Binds a session to the best platform satisfying schema.layer_hint:
    /// highest trust tier, then highest capability score, then registration
    /// order. Throws NoPlatformAvailable when no platform satisfies the hint.
    std::shared_ptr<InferenceSession> create_session(const ModelSchema& schema) const;

    /// Binds a session to an explicitly chosen platform.
    std::shared_ptr<InferenceSession> create_session_on(const ModelSchema& schema,
                                                        std::shared_ptr<Platform> platform) const;

    /// The platform create_session would pick for this schema.
    std::shared_ptr<Platform> select_platform(LayerHint hint) const;

private:
    mutable std::mutex mutex_;
    std::vector<std::shared_ptr<Platform>> platforms_;
};

}  // namespace fogllm
