#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>
#include <vector>

#include "fogllm/local/gate.hpp"

namespace testsupport {

/// Runs `jobs` instrumented submissions through the gate with a deterministic
/// submission order (job i is queued before job i+1 is submitted) and reports
/// what the serialization invariant needs: execution order, recorded
/// execution intervals, and the maximum overlap observed.
struct GateRunResult {
    std::vector<std::size_t> execution_order;
    std::vector<std::pair<std::chrono::steady_clock::time_point,
                          std::chrono::steady_clock::time_point>>
        intervals;  // indexed by job
    int max_active = 0;
};

inline GateRunResult run_serialization_trial(std::size_t jobs,
                                             std::chrono::microseconds job_duration) {
    fogllm::local::ExecutionGate gate(jobs + 1);

    std::mutex mutex;
    std::condition_variable cv;
    bool release_blocker = false;

    // The blocker occupies the gate so every submission below queues up.
    std::thread blocker([&] {
        gate.submit([&] {
            std::unique_lock lock(mutex);
            cv.wait(lock, [&] { return release_blocker; });
            return 0;
        });
    });
    while (gate.pending() < 1) std::this_thread::yield();

    GateRunResult result;
    result.intervals.resize(jobs);
    std::atomic<int> active{0};
    std::atomic<int> max_active{0};
    std::mutex order_mutex;

    std::vector<std::thread> submitters;
    submitters.reserve(jobs);
    for (std::size_t i = 0; i < jobs; ++i) {
        submitters.emplace_back([&, i] {
            gate.submit([&, i] {
                int now_active = ++active;
                int seen = max_active.load();
                while (now_active > seen && !max_active.compare_exchange_weak(seen, now_active)) {
                }
                auto start = std::chrono::steady_clock::now();
                std::this_thread::sleep_for(job_duration);
                auto end = std::chrono::steady_clock::now();
                --active;
                {
                    std::lock_guard lock(order_mutex);
                    result.execution_order.push_back(i);
                    result.intervals[i] = {start, end};
                }
                return 0;
            });
        });
        // Job i holds ticket i+1 before job i+1 is submitted.
        while (gate.pending() < i + 2) std::this_thread::yield();
    }

    {
        std::lock_guard lock(mutex);
        release_blocker = true;
        cv.notify_all();
    }
    blocker.join();
    for (auto& t : submitters) t.join();

    result.max_active = max_active.load();
    return result;
}

}  // namespace testsupport
