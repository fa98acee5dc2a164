#pragma once

#include <string>
#include <vector>

#include "fogllm/core/runner.hpp"
#include "fogllm/dispatch/policy.hpp"

namespace fogllm::dispatch {

/// One trust-matched processing step. The template carries exactly one
/// "{input}" slot; it receives the pipeline input for stage 0 and the prior
/// stage's output afterwards, so tier-restricted raw input only ever reaches
/// the stage its rule qualifies.
struct PipelineStage {
    std::string task_class;
    std::string prompt_template;  // one {input} slot
    bool output_feeds_next = true;
};

struct StageTrace {
    std::size_t stage_index = 0;
    std::string task_class;
    LayerKind platform_kind = LayerKind::local;
    std::string prompt;
    std::string output;
};

struct PipelineResult {
    std::string final_text;
    std::vector<StageTrace> transcript;
};

std::string render_template(const std::string& prompt_template, const std::string& input);

/// Runs the stages in order, dispatching each via the policy over the
/// runner's inventory. Dispatch and backend errors carry the failing stage
/// index (PipelineStageError). Throws ValidationError when the final stage
/// has output_feeds_next set.
PipelineResult run_pipeline(const std::vector<PipelineStage>& stages, const DispatchPolicy& policy,
                            const Runner& runner, const ModelSchema& schema,
                            const std::string& input_text);

}  // namespace fogllm::dispatch
