#pragma once

#include <condition_variable>
#include <cstdint>
#include <mutex>

#include "fogllm/errors.hpp"

namespace fogllm::local {

/// Serialized execution gate: jobs run strictly one at a time, FIFO by
/// submission order. Callers block until their turn. Submissions beyond
/// max_pending (running + queued) are rejected with QueueFull.
class ExecutionGate {
public:
    explicit ExecutionGate(std::size_t max_pending = 16);

    template <class Fn>
    auto submit(Fn&& fn) -> decltype(fn()) {
        acquire();
        struct Release {
            ExecutionGate* gate;
            ~Release() { gate->release(); }
        } release{this};
        return fn();
    }

    std::uint64_t jobs_executed() const;
    std::size_t max_pending() const { return max_pending_; }

    /// Jobs currently holding or waiting for the gate.
    std::size_t pending() const;

private:
    /// Blocks until the caller holds the gate; returns its ticket.
    std::uint64_t acquire();
    void release();

    const std::size_t max_pending_;
    mutable std::mutex mutex_;
    std::condition_variable turn_cv_;
    std::uint64_t next_ticket_ = 0;
    std::uint64_t now_serving_ = 0;
    std::size_t pending_ = 0;
};

}  // namespace fogllm::local
