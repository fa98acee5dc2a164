#include "fogllm/local/gate.hpp"

namespace fogllm::local {

ExecutionGate::ExecutionGate(std::size_t max_pending) : max_pending_(max_pending) {}

std::uint64_t ExecutionGate::acquire() {
    std::unique_lock lock(mutex_);
    if (pending_ >= max_pending_) {
        throw QueueFull("gate queue full (depth " + std::to_string(max_pending_) + ")");
    }
    ++pending_;
    const std::uint64_t ticket = next_ticket_++;
    turn_cv_.wait(lock, [&] { return now_serving_ == ticket; });
    return ticket;
}

void ExecutionGate::release() {
    std::lock_guard lock(mutex_);
    --pending_;
    ++now_serving_;
    turn_cv_.notify_all();
}

std::uint64_t ExecutionGate::jobs_executed() const {
    std::lock_guard lock(mutex_);
    return now_serving_;
}

std::size_t ExecutionGate::pending() const {
    std::lock_guard lock(mutex_);
    return pending_;
}

}  // namespace fogllm::local
