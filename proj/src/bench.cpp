#include "fogllm/bench/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include <nlohmann/json.hpp>

#include "fogllm/core/session.hpp"

namespace fogllm::bench {

namespace {

struct RunSample {
    double ttft_ms = 0.0;
    double tokens_per_second = 0.0;
};

struct Stats {
    double mean = 0.0;
    double stddev = 0.0;
};

Stats stats_of(const std::vector<double>& values) {
    Stats s;
    if (values.empty()) return s;
    for (double v : values) s.mean += v;
    s.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double acc = 0.0;
        for (double v : values) acc += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(acc / static_cast<double>(values.size() - 1));
    }
    return s;
}

}  // namespace

BenchReport run_bench(Platform& platform, const ModelSchema& schema, const std::string& prompt,
                      int runs) {
    using clock = std::chrono::steady_clock;
    if (runs < 1) {
        throw RangeError("runs must be >= 1");
    }

    std::vector<RunSample> samples;
    samples.reserve(static_cast<std::size_t>(runs));

    for (int run = 0; run < runs; ++run) {
        ChatContext context;
        context.append(user_message(prompt));

        std::size_t deltas = 0;
        clock::time_point first_delta{};
        clock::time_point last_delta{};

        const auto sent_at = clock::now();
        platform.generate(schema, context, {}, [&](std::string_view) {
            const auto now = clock::now();
            if (deltas == 0) first_delta = now;
            last_delta = now;
            ++deltas;
        });

        RunSample sample;
        if (deltas == 0) {
            throw BackendError("bench run produced no deltas");
        }
        sample.ttft_ms = std::chrono::duration<double, std::milli>(first_delta - sent_at).count();
        if (deltas >= 2 && last_delta > first_delta) {
            const double span_s =
                std::chrono::duration<double>(last_delta - first_delta).count();
            sample.tokens_per_second = static_cast<double>(deltas) / span_s;
        }
        samples.push_back(sample);
    }

    std::vector<double> ttfts, rates;
    for (const auto& s : samples) {
        ttfts.push_back(s.ttft_ms);
        rates.push_back(s.tokens_per_second);
    }
    const Stats ttft = stats_of(ttfts);
    const Stats rate = stats_of(rates);

    BenchReport report;
    report.platform_kind = platform.descriptor().kind;
    report.model_id = schema.model_id();
    report.prompt = prompt;
    report.runs = runs;
    report.ttft_mean_ms = ttft.mean;
    report.ttft_stddev_ms = ttft.stddev;
    report.tokens_per_second_mean = rate.mean;
    report.tokens_per_second_stddev = rate.stddev;
    return report;
}

std::string bench_report_json(const BenchReport& report) {
    nlohmann::ordered_json out;
    out["platform"] = to_string(report.platform_kind);
    out["model"] = report.model_id;
    out["prompt"] = report.prompt;
    out["runs"] = report.runs;
    out["ttft_ms"] = {{"mean", report.ttft_mean_ms}, {"stddev", report.ttft_stddev_ms}};
    out["tokens_per_second"] = {{"mean", report.tokens_per_second_mean},
                                {"stddev", report.tokens_per_second_stddev}};
    return out.dump();
}

std::string bench_report_table(const BenchReport& report) {
    char buffer[512];
    std::snprintf(buffer, sizeof(buffer),
                  "platform          %s\n"
                  "model             %s\n"
                  "runs              %d\n"
                  "ttft              %.1f ms (sd %.1f)\n"
                  "tokens/sec        %.2f (sd %.2f)\n",
                  to_string(report.platform_kind).c_str(), report.model_id.c_str(), report.runs,
                  report.ttft_mean_ms, report.ttft_stddev_ms, report.tokens_per_second_mean,
                  report.tokens_per_second_stddev);
    return buffer;
}

}  // namespace fogllm::bench
