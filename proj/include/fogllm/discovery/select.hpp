#pragma once

#include <chrono>
#include <mutex>

#include "fogllm/discovery/link.hpp"

namespace fogllm::discovery {

/// Browses the link and returns resolved records (addresses filled in),
/// sorted by instance name for deterministic merging.
std::vector<FogNodeRecord> browse_and_resolve(ServiceLink& link, std::chrono::milliseconds timeout);

/// Fills proximity_rtt with the median of 3 probes. Throws Unreachable when
/// any probe fails; callers exclude such records from selection.
FogNodeRecord measure_proximity(const FogNodeRecord& record, ServiceLink& link);

/// Probes all records concurrently (join barrier); unreachable records are
/// dropped. The result is sorted by instance name.
std::vector<FogNodeRecord> probe_all(const std::vector<FogNodeRecord>& records, ServiceLink& link);

/// The nearest node: minimum proximity_rtt, ties broken by lexicographically
/// smallest instance name. Records without a measurement are ignored. Throws
/// NoNodesDiscovered when nothing qualifies.
FogNodeRecord select_node(const std::vector<FogNodeRecord>& records);

/// Browse cache: discovery results are reused for a TTL (default 30 s)
/// rather than re-browsing per request.
class DiscoveryCache {
public:
    explicit DiscoveryCache(ServiceLink& link,
                            std::chrono::milliseconds ttl = std::chrono::seconds(30));

    std::vector<FogNodeRecord> records(std::chrono::milliseconds browse_timeout);
    void invalidate();

private:
    ServiceLink& link_;
    std::chrono::milliseconds ttl_;
    std::mutex mutex_;
    std::vector<FogNodeRecord> cached_;
    std::chrono::steady_clock::time_point fetched_at_{};
    bool valid_ = false;
};

}  // namespace fogllm::discovery
