#include "fogllm/discovery/select.hpp"

#include <algorithm>
#include <future>

namespace fogllm::discovery {

std::vector<FogNodeRecord> browse_and_resolve(ServiceLink& link,
                                              std::chrono::milliseconds timeout) {
    auto records = link.browse(timeout);
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return a.instance_name < b.instance_name;
    });
    return records;
}

FogNodeRecord measure_proximity(const FogNodeRecord& record, ServiceLink& link) {
    double probes[3];
    for (double& p : probes) {
        p = link.probe_rtt_ms(record);
    }
    std::sort(std::begin(probes), std::end(probes));

    FogNodeRecord measured = record;
    measured.proximity_rtt_ms = probes[1];
    return measured;
}

std::vector<FogNodeRecord> probe_all(const std::vector<FogNodeRecord>& records,
                                     ServiceLink& link) {
    std::vector<std::future<FogNodeRecord>> futures;
    futures.reserve(records.size());
    for (const auto& record : records) {
        futures.push_back(std::async(std::launch::async,
                                     [&record, &link] { return measure_proximity(record, link); }));
    }

    std::vector<FogNodeRecord> measured;
    for (auto& f : futures) {
        try {
            measured.push_back(f.get());
        } catch (const Unreachable&) {
            // excluded from selection
        }
    }
    std::sort(measured.begin(), measured.end(), [](const auto& a, const auto& b) {
        return a.instance_name < b.instance_name;
    });
    return measured;
}

FogNodeRecord select_node(const std::vector<FogNodeRecord>& records) {
    const FogNodeRecord* best = nullptr;
    for (const auto& record : records) {
        if (!record.proximity_rtt_ms) continue;
        if (!best || *record.proximity_rtt_ms < *best->proximity_rtt_ms ||
            (*record.proximity_rtt_ms == *best->proximity_rtt_ms &&
             record.instance_name < best->instance_name)) {
            best = &record;
        }
    }
    if (!best) {
        throw NoNodesDiscovered("no measured fog nodes to select from");
    }
    return *best;
}

DiscoveryCache::DiscoveryCache(ServiceLink& link, std::chrono::milliseconds ttl)
    : link_(link), ttl_(ttl) {}

std::vector<FogNodeRecord> DiscoveryCache::records(std::chrono::milliseconds browse_timeout) {
    std::lock_guard lock(mutex_);
    auto now = std::chrono::steady_clock::now();
    if (valid_ && now - fetched_at_ < ttl_) {
        return cached_;
    }
    cached_ = browse_and_resolve(link_, browse_timeout);
    fetched_at_ = now;
    valid_ = true;
    return cached_;
}

void DiscoveryCache::invalidate() {
    std::lock_guard lock(mutex_);
    valid_ = false;
}

}  // namespace fogllm::discovery
