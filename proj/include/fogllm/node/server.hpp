#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "fogllm/discovery/link.hpp"
#include "fogllm/node/backend.hpp"

namespace fogllm::node {

struct NodeConfig {
    std::string instance_name = "fog-node";
    std::string bind_host = "0.0.0.0";
    int port = 0;  // 0 requests an ephemeral port (tests); config files require [1,65535]
    std::string cert_chain_path;
    std::string private_key_path;
    std::string jwt_verification_key;
    std::string jwt_audience = "fogllm-node";
    std::variant<MockBackendSettings, ProxyBackendSettings> backend = MockBackendSettings{};
    std::vector<std::string> advertised_models;
    std::string trust_tier_label = "fog";
};

/// Parses the single JSON config document mirroring NodeConfig field for
/// field. FOGLLM_JWT_KEY overrides the verification key and
/// FOGLLM_PROXY_API_KEY the proxy key, when set. Throws ValidationError.
NodeConfig load_node_config(const std::string& json_text);
NodeConfig load_node_config_file(const std::string& path);

/// The fog node daemon: TLS-terminated OpenAI-mirroring inference API with an
/// embedded auth layer. Routes:
///   POST /v1/chat/completions  (bearer token required)
///   GET  /v1/models            (bearer token required)
///   GET  /health               (open by design)
class FogNode {
public:
    explicit FogNode(NodeConfig config);
    ~FogNode();

    FogNode(const FogNode&) = delete;
    FogNode& operator=(const FogNode&) = delete;

    /// Binds and serves on a background thread. Throws IoError when the
    /// listener cannot start (bad certs, port in use).
    void start();
    void stop();

    std::uint16_t port() const { return port_; }
    std::string endpoint() const;

    /// Completions served, i.e. how often a backend was invoked. Rejected
    /// requests leave this unchanged.
    std::uint64_t backend_invocations() const { return invocations_.load(); }

    std::int64_t uptime_s() const;
    const NodeConfig& config() const { return config_; }

    /// DNS-SD ad for this node: service type "_fogllm._tcp", TXT keys
    /// api=v1, models=<comma list>, tier=<label>.
    discovery::ServiceAd service_ad() const;

    /// Registers with a service link; the registration withdraws on handle
    /// destruction or node stop.
    discovery::Registration advertise(discovery::ServiceLink& link);

private:
    struct Impl;

    NodeConfig config_;
    std::unique_ptr<NodeBackend> backend_;
    std::unique_ptr<Impl> impl_;
    std::thread serve_thread_;
    std::uint16_t port_ = 0;
    std::atomic<std::uint64_t> invocations_{0};
    std::chrono::steady_clock::time_point started_at_{};
};

}  // namespace fogllm::node
