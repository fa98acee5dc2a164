#include "fogllm/core/runner.hpp"

#include <algorithm>

namespace fogllm {

namespace {

bool hint_matches(LayerHint hint, LayerKind kind) {
    switch (hint) {
        case LayerHint::any: return true;
        case LayerHint::local: return kind == LayerKind::local;
        case LayerHint::fog: return kind == LayerKind::fog;
        case LayerHint::cloud: return kind == LayerKind::cloud;
    }
    return false;
}

}  // namespace

void Runner::register_platform(std::shared_ptr<Platform> platform) {
    if (!platform) return;
    std::lock_guard lock(mutex_);
    const auto& desc = platform->descriptor();
    auto it = std::find_if(platforms_.begin(), platforms_.end(), [&](const auto& p) {
        return p->descriptor().kind == desc.kind && p->descriptor().endpoint == desc.endpoint;
    });
    if (it != platforms_.end()) {
        *it = std::move(platform);
    } else {
        platforms_.push_back(std::move(platform));
    }
}

std::vector<std::shared_ptr<Platform>> Runner::platforms() const {
    std::lock_guard lock(mutex_);
    return platforms_;
}

std::shared_ptr<Platform> Runner::select_platform(LayerHint hint) const {
    std::lock_guard lock(mutex_);
    std::shared_ptr<Platform> best;
    for (const auto& p : platforms_) {
        const auto& d = p->descriptor();
        if (!hint_matches(hint, d.kind)) continue;
        if (!best) {
            best = p;
            continue;
        }
        const auto& b = best->descriptor();
        // Highest trust tier wins, then highest capability; earlier
        // registration breaks remaining ties.
        if (d.trust_tier > b.trust_tier ||
            (d.trust_tier == b.trust_tier && d.capability_score > b.capability_score)) {
            best = p;
        }
    }
    return best;
}

std::shared_ptr<InferenceSession> Runner::create_session(const ModelSchema& schema) const {
    auto platform = select_platform(schema.layer_hint());
    if (!platform) {
        throw NoPlatformAvailable("no registered platform satisfies layer hint '" +
                                  to_string(schema.layer_hint()) + "'");
    }
    return std::make_shared<InferenceSession>(schema, std::move(platform));
}

std::shared_ptr<InferenceSession> Runner::create_session_on(
    const ModelSchema& schema, std::shared_ptr<Platform> platform) const {
    return std::make_shared<InferenceSession>(schema, std::move(platform));
}

}  // namespace fogllm
