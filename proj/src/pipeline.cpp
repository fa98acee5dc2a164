#include "fogllm/dispatch/pipeline.hpp"

namespace fogllm::dispatch {

std::string render_template(const std::string& prompt_template, const std::string& input) {
    const std::string slot = "{input}";
    std::size_t pos = prompt_template.find(slot);
    if (pos == std::string::npos) {
        throw ValidationError("prompt template has no {input} slot");
    }
    std::string rendered = prompt_template;
    rendered.replace(pos, slot.size(), input);
    return rendered;
}

PipelineResult run_pipeline(const std::vector<PipelineStage>& stages, const DispatchPolicy& policy,
                            const Runner& runner, const ModelSchema& schema,
                            const std::string& input_text) {
    if (stages.empty()) {
        throw ValidationError("pipeline requires at least one stage");
    }
    if (stages.back().output_feeds_next) {
        throw ValidationError("last stage must have output_feeds_next=false");
    }

    PipelineResult result;
    std::string carried = input_text;

    for (std::size_t i = 0; i < stages.size(); ++i) {
        const PipelineStage& stage = stages[i];
        try {
            auto platform = dispatch(policy, stage.task_class, runner.platforms());
            auto session = runner.create_session_on(schema, platform);

            StageTrace trace;
            trace.stage_index = i;
            trace.task_class = stage.task_class;
            trace.platform_kind = platform->descriptor().kind;
            trace.prompt = render_template(stage.prompt_template, carried);

            GenerationOutcome outcome = session->generate(user_message(trace.prompt), {}, {});
            trace.output = outcome.message.content;
            carried = trace.output;
            result.transcript.push_back(std::move(trace));
        } catch (const PipelineStageError&) {
            throw;
        } catch (const Error& e) {
            throw PipelineStageError(i, e.what());
        }
    }

    result.final_text = carried;
    return result;
}

}  // namespace fogllm::dispatch
