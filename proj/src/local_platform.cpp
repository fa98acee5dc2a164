#include "fogllm/local/platform.hpp"

#include "fogllm/core/mock.hpp"

namespace fogllm::local {

LocalPlatform::LocalPlatform(std::shared_ptr<ModelCatalog> catalog, std::uint64_t seed,
                             int capability_score, std::size_t queue_depth)
    : descriptor_(PlatformDescriptor::make(LayerKind::local, capability_score)),
      catalog_(std::move(catalog)),
      seed_(seed),
      gate_(queue_depth) {}

GenerationOutcome LocalPlatform::generate(const ModelSchema& schema, const ChatContext& context,
                                          const std::vector<ToolSpec>& tools,
                                          const DeltaCallback& on_delta) {
    if (catalog_ && !catalog_->contains(schema.model_id())) {
        throw ModelMissing("model not in local catalog: " + schema.model_id());
    }

    return gate_.submit([&] {
        SeededMockPlatform runtime(descriptor_, seed_);
        return runtime.generate(schema, context, tools, on_delta);
    });
}

}  // namespace fogllm::local
