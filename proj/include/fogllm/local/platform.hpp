#pragma once

#include <cstdint>
#include <memory>

#include "fogllm/core/platform.hpp"
#include "fogllm/local/catalog.hpp"
#include "fogllm/local/gate.hpp"

namespace fogllm::local {

/// The edge layer. Generations pass through the serialized execution gate
/// (one job at a time, FIFO); the inference runtime behind it is the
/// deterministic seeded mock. A real in-process runtime slots in behind the
/// same gate without touching callers.
class LocalPlatform : public Platform {
public:
    /// catalog may be null (harness mode): model availability is not checked.
    /// With a catalog attached, generating for a model that is not cataloged
    /// throws ModelMissing.
    LocalPlatform(std::shared_ptr<ModelCatalog> catalog, std::uint64_t seed = 1,
                  int capability_score = 1, std::size_t queue_depth = 16);

    const PlatformDescriptor& descriptor() const override { return descriptor_; }

    GenerationOutcome generate(const ModelSchema& schema, const ChatContext& context,
                               const std::vector<ToolSpec>& tools,
                               const DeltaCallback& on_delta) override;

    ExecutionGate& gate() { return gate_; }

private:
    PlatformDescriptor descriptor_;
    std::shared_ptr<ModelCatalog> catalog_;
    std::uint64_t seed_;
    ExecutionGate gate_;
};

}  // namespace fogllm::local
