#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "fogllm/discovery/link.hpp"

namespace fogllm::discovery {

/// In-process service directory with configured per-node latencies. Satisfies
/// the same contract as the mDNS link; used by the test harness and the
/// simnet CLI. Topology JSON: {"nodes":[{"name","rtt_ms","models":[...]}]}.
class SimulatedLink : public ServiceLink {
public:
    Registration advertise(const ServiceAd& ad) override;
    std::vector<FogNodeRecord> browse(std::chrono::milliseconds timeout) override;
    double probe_rtt_ms(const FogNodeRecord& record) override;

    /// Latency model for an instance: probes cycle through the sequence
    /// (constant latency = one element). Empty marks the node unreachable.
    void set_probe_profile(const std::string& instance_name, std::vector<double> rtt_ms_sequence);

    std::size_t advertised_count() const;

private:
    struct Entry {
        ServiceAd ad;
        std::vector<double> probe_profile;
        std::size_t next_probe = 0;
    };

    void withdraw(const std::string& instance_name);

    mutable std::mutex mutex_;
    std::vector<Entry> entries_;
};

}  // namespace fogllm::discovery
