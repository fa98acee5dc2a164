#pragma once

#include <atomic>
#include <mutex>
#include <thread>

#include "fogllm/discovery/link.hpp"

namespace fogllm::discovery {

struct MdnsOptions {
    std::string group = "224.0.0.251";
    std::uint16_t port = 5353;
    /// Interface address to join/send on. "0.0.0.0" follows the routing
    /// table; tests pin "127.0.0.1" to stay on loopback.
    std::string interface_address = "0.0.0.0";
    std::uint32_t record_ttl_s = 120;
    /// Collision-probe window before claiming an instance name.
    std::chrono::milliseconds probe_window{250};
};

/// Real multicast DNS / DNS-SD link (RFC 6762/6763 subset): answers PTR
/// queries for "_fogllm._tcp.local." with PTR+SRV+TXT+A record sets, sends
/// announcements on register and goodbyes (TTL 0) on withdraw, and browses by
/// querying and collecting responses. Proximity probes measure a fresh
/// TLS GET /health round trip against the advertised endpoint.
class MdnsLink : public ServiceLink {
public:
    explicit MdnsLink(MdnsOptions options = {});
    ~MdnsLink() override;

    MdnsLink(const MdnsLink&) = delete;
    MdnsLink& operator=(const MdnsLink&) = delete;

    Registration advertise(const ServiceAd& ad) override;
    std::vector<FogNodeRecord> browse(std::chrono::milliseconds timeout) override;
    double probe_rtt_ms(const FogNodeRecord& record) override;

private:
    struct Entry {
        ServiceAd ad;
    };

    void responder_loop();
    void announce(const Entry& entry, bool goodbye);
    std::string build_response(const std::vector<Entry>& entries, bool goodbye) const;
    void withdraw(const std::string& claimed_name);
    std::vector<std::string> probe_existing_instances(std::chrono::milliseconds window);
    void send_packet(const std::string& packet);

    MdnsOptions options_;
    int responder_fd_ = -1;
    std::thread responder_thread_;
    std::atomic<bool> running_{false};

    mutable std::mutex mutex_;
    std::vector<Entry> entries_;
};

}  // namespace fogllm::discovery
