#pragma once

#include <string>

#include "fogllm/core/platform.hpp"
#include "fogllm/core/schema.hpp"

namespace fogllm::bench {

/// Latency/throughput report: mean and standard deviation over `runs`
/// repeated generations. TTFT is request-send to first delta; tokens/sec is
/// emitted deltas over the first-to-last-delta interval, so the two metrics
/// stay independent.
struct BenchReport {
    LayerKind platform_kind = LayerKind::local;
    std::string model_id;
    std::string prompt;
    int runs = 0;
    double ttft_mean_ms = 0.0;
    double ttft_stddev_ms = 0.0;
    double tokens_per_second_mean = 0.0;
    double tokens_per_second_stddev = 0.0;
};

/// Runs the prompt `runs` times against the platform (fresh session each
/// run). Any failed run aborts the report; partial results are discarded.
BenchReport run_bench(Platform& platform, const ModelSchema& schema, const std::string& prompt,
                      int runs = 5);

std::string bench_report_json(const BenchReport& report);
std::string bench_report_table(const BenchReport& report);

}  // namespace fogllm::bench
