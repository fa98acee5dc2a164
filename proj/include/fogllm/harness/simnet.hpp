#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <thread>

#include "fogllm/client/http_platform.hpp"
#include "fogllm/core/runner.hpp"
#include "fogllm/discovery/simlink.hpp"
#include "fogllm/local/platform.hpp"
#include "fogllm/node/server.hpp"

namespace fogllm::harness {

/// Plain-HTTP OpenAI-compatible endpoint standing in for a remote cloud
/// provider. Backed by the deterministic mock; records every request body it
/// decodes so tests can assert what data ever left for the cloud.
class CloudStub {
public:
    explicit CloudStub(std::uint64_t seed = 99,
                       std::vector<std::string> models = {"gpt-4-0125-preview"});
    explicit CloudStub(node::MockBackendSettings settings,
                       std::vector<std::string> models = {"gpt-4-0125-preview"});
    ~CloudStub();

    void start();
    void stop();
    std::string base_url() const;

    std::vector<wire::ChatRequest> observed_requests() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::unique_ptr<node::MockBackend> backend_;
    std::vector<std::string> models_;
    std::thread serve_thread_;
    int port_ = 0;

    mutable std::mutex mutex_;
    std::vector<wire::ChatRequest> observed_;
};

struct SimnetNodeSpec {
    std::string name;
    double rtt_ms = 5.0;
    std::vector<std::string> models = {"llama2:7b"};
    std::uint64_t seed = 1;
    double tokens_per_second = 0.0;
    int first_token_delay_ms = 0;
    std::vector<double> probe_profile;  // overrides constant rtt_ms when set
};

struct SimnetTopology {
    std::vector<SimnetNodeSpec> nodes;
    bool cloud_stub = true;
    std::uint64_t cloud_seed = 99;
    std::uint64_t local_seed = 7;
    int local_capability = 1;
    int fog_capability = 2;
    int cloud_capability = 3;
    std::string jwt_key;  // empty -> a random key is generated
};

/// Parses {"nodes":[{"name","rtt_ms","models":[...]}]} plus harness
/// extensions (seed, tokens_per_second, first_token_delay_ms,
/// probe_profile, cloud/local settings). Throws TopologyError naming the
/// offending node.
SimnetTopology topology_from_json(const std::string& json_text);
SimnetTopology topology_from_file(const std::string& path);

/// Everything a layered end-to-end run needs, on loopback only: real TLS fog
/// nodes registered on a simulated link, a plain-HTTP cloud stub, an
/// in-process local platform, a minted JWT, and a fresh self-signed cert.
/// Teardown happens on destruction.
class Simnet {
public:
    explicit Simnet(const SimnetTopology& topology);
    ~Simnet();

    Simnet(const Simnet&) = delete;
    Simnet& operator=(const Simnet&) = delete;

    discovery::SimulatedLink& link() { return link_; }
    CloudStub* cloud() { return cloud_ ? cloud_.get() : nullptr; }
    const std::string& jwt_key() const { return jwt_key_; }
    const std::string& ca_cert_path() const { return cert_path_; }

    std::string mint_token(std::int64_t ttl_s = 3600,
                           const std::vector<std::string>& scopes = {"llm:infer"}) const;

    /// Browse + probe + select, then build a fog client platform for the
    /// nearest node. token overrides the internally minted one.
    std::shared_ptr<client::HttpPlatform> fog_platform(const std::string& token = {});

    std::shared_ptr<local::LocalPlatform> local_platform();
    std::shared_ptr<client::HttpPlatform> cloud_platform();

    /// Runner with the full {local, fog, cloud} inventory.
    std::shared_ptr<Runner> make_runner();

    const std::vector<std::unique_ptr<node::FogNode>>& nodes() const { return nodes_; }

private:
    SimnetTopology topology_;
    std::filesystem::path workdir_;
    std::string cert_path_;
    std::string key_path_;
    std::string jwt_key_;

    discovery::SimulatedLink link_;
    std::vector<std::unique_ptr<node::FogNode>> nodes_;
    std::vector<discovery::Registration> registrations_;
    std::unique_ptr<CloudStub> cloud_;
    std::shared_ptr<local::LocalPlatform> local_;
};

}  // namespace fogllm::harness
