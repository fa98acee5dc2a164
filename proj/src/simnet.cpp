#include "fogllm/harness/simnet.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fogllm/discovery/select.hpp"
#include "fogllm/node/jwt.hpp"
#include "fogllm/node/tls.hpp"

namespace fogllm::harness {

using nlohmann::json;

struct CloudStub::Impl {
    httplib::Server server;
};

CloudStub::CloudStub(std::uint64_t seed, std::vector<std::string> models)
    : CloudStub(node::MockBackendSettings{seed}, std::move(models)) {}

CloudStub::CloudStub(node::MockBackendSettings settings, std::vector<std::string> models)
    : models_(std::move(models)) {
    backend_ = std::make_unique<node::MockBackend>(settings,
                                                   models_.empty() ? "" : models_.front());
}

CloudStub::~CloudStub() { stop(); }

void CloudStub::start() {
    impl_ = std::make_unique<Impl>();
    auto& server = impl_->server;

    server.Get("/v1/models", [this](const httplib::Request&, httplib::Response& res) {
        res.set_content(wire::encode_model_list(models_), "application/json");
    });

    server.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                               httplib::Response& res) {
        wire::ChatRequest request;
        try {
            request = wire::decode_request(req.body);
        } catch (const Error& e) {
            res.status = 400;
            res.set_content(std::string("{\"error\":{\"message\":\"") + e.what() + "\"}}",
                            "application/json");
            return;
        }
        {
            std::lock_guard lock(mutex_);
            observed_.push_back(request);
        }

        if (!request.stream) {
            res.set_content(backend_->complete_body(request), "application/json");
            return;
        }
        auto backend = backend_.get();
        auto request_copy = std::make_shared<wire::ChatRequest>(std::move(request));
        res.set_chunked_content_provider(
            "text/event-stream", [backend, request_copy](std::size_t, httplib::DataSink& sink) {
                backend->stream_events(*request_copy, [&](std::string_view event) {
                    return sink.write(event.data(), event.size());
                });
                sink.done();
                return true;
            });
    });

    port_ = server.bind_to_any_port("127.0.0.1");
    serve_thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
    server.wait_until_ready();
}

void CloudStub::stop() {
    if (impl_) {
        impl_->server.stop();
    }
    if (serve_thread_.joinable()) {
        serve_thread_.join();
    }
    impl_.reset();
}

std::string CloudStub::base_url() const { return "http://127.0.0.1:" + std::to_string(port_); }

std::vector<wire::ChatRequest> CloudStub::observed_requests() const {
    std::lock_guard lock(mutex_);
    return observed_;
}

SimnetTopology topology_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw TopologyError(std::string("bad topology json: ") + e.what());
    }

    SimnetTopology topology;
    if (!j.contains("nodes") || !j.at("nodes").is_array()) {
        throw TopologyError("topology requires a nodes array");
    }
    for (const auto& n : j.at("nodes")) {
        SimnetNodeSpec spec;
        spec.name = n.value("name", "");
        if (spec.name.empty()) {
            throw TopologyError("node without a name");
        }
        for (const auto& existing : topology.nodes) {
            if (existing.name == spec.name) {
                throw TopologyError("duplicate node name: " + spec.name);
            }
        }
        spec.rtt_ms = n.value("rtt_ms", 5.0);
        if (n.contains("models")) {
            spec.models.clear();
            for (const auto& m : n.at("models")) spec.models.push_back(m.get<std::string>());
        }
        spec.seed = n.value("seed", std::uint64_t{1});
        spec.tokens_per_second = n.value("tokens_per_second", 0.0);
        spec.first_token_delay_ms = n.value("first_token_delay_ms", 0);
        if (n.contains("probe_profile")) {
            for (const auto& p : n.at("probe_profile")) {
                spec.probe_profile.push_back(p.get<double>());
            }
        }
        topology.nodes.push_back(std::move(spec));
    }
    topology.cloud_stub = j.value("cloud_stub", true);
    topology.cloud_seed = j.value("cloud_seed", std::uint64_t{99});
    topology.local_seed = j.value("local_seed", std::uint64_t{7});
    topology.local_capability = j.value("local_capability", 1);
    topology.fog_capability = j.value("fog_capability", 2);
    topology.cloud_capability = j.value("cloud_capability", 3);
    topology.jwt_key = j.value("jwt_key", "");
    return topology;
}

SimnetTopology topology_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw TopologyError("cannot read topology file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return topology_from_json(buffer.str());
}

namespace {

std::string random_hex(std::size_t bytes) {
    std::random_device rd;
    std::string out;
    static const char* hex = "0123456789abcdef";
    for (std::size_t i = 0; i < bytes; ++i) {
        unsigned v = rd() & 0xff;
        out += hex[v >> 4];
        out += hex[v & 0xf];
    }
    return out;
}

}  // namespace

Simnet::Simnet(const SimnetTopology& topology) : topology_(topology) {
    workdir_ = std::filesystem::temp_directory_path() / ("fogllm-simnet-" + random_hex(6));
    std::filesystem::create_directories(workdir_);
    cert_path_ = (workdir_ / "node-cert.pem").string();
    key_path_ = (workdir_ / "node-key.pem").string();
    node::write_self_signed_cert(cert_path_, key_path_);
    jwt_key_ = topology_.jwt_key.empty() ? random_hex(16) : topology_.jwt_key;

    for (const auto& spec : topology_.nodes) {
        node::NodeConfig config;
        config.instance_name = spec.name;
        config.bind_host = "127.0.0.1";  // simnet never leaves loopback
        config.port = 0;
        config.cert_chain_path = cert_path_;
        config.private_key_path = key_path_;
        config.jwt_verification_key = jwt_key_;
        config.advertised_models = spec.models;

        node::MockBackendSettings mock;
        mock.seed = spec.seed;
        mock.tokens_per_second = spec.tokens_per_second;
        mock.first_token_delay_ms = spec.first_token_delay_ms;
        config.backend = mock;

        auto fog_node = std::make_unique<node::FogNode>(std::move(config));
        fog_node->start();
        registrations_.push_back(fog_node->advertise(link_));
        link_.set_probe_profile(registrations_.back().claimed_name(),
                                spec.probe_profile.empty() ? std::vector<double>{spec.rtt_ms}
                                                           : spec.probe_profile);
        nodes_.push_back(std::move(fog_node));
    }

    if (topology_.cloud_stub) {
        cloud_ = std::make_unique<CloudStub>(topology_.cloud_seed);
        cloud_->start();
    }

    local_ = std::make_shared<local::LocalPlatform>(nullptr, topology_.local_seed,
                                                    topology_.local_capability);
}

Simnet::~Simnet() {
    registrations_.clear();
    nodes_.clear();
    cloud_.reset();
    std::error_code ec;
    std::filesystem::remove_all(workdir_, ec);
}

std::string Simnet::mint_token(std::int64_t ttl_s,
                               const std::vector<std::string>& scopes) const {
    node::AuthClaims claims;
    claims.issuer = "simnet";
    claims.audience = "fogllm-node";
    claims.expiry = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::system_clock::now().time_since_epoch())
                        .count() +
                    ttl_s;
    claims.scopes = scopes;
    return node::jwt_mint(claims, jwt_key_);
}

std::shared_ptr<client::HttpPlatform> Simnet::fog_platform(const std::string& token) {
    auto records = discovery::browse_and_resolve(link_, std::chrono::milliseconds(50));
    auto measured = discovery::probe_all(records, link_);
    auto nearest = discovery::select_node(measured);

    client::HttpPlatformConfig config;
    config.kind = LayerKind::fog;
    config.base_url =
        "https://" + nearest.addresses.front() + ":" + std::to_string(nearest.port);
    config.bearer_token = token.empty() ? mint_token() : token;
    config.ca_cert_path = cert_path_;
    config.capability_score = topology_.fog_capability;
    return std::make_shared<client::HttpPlatform>(config);
}

std::shared_ptr<local::LocalPlatform> Simnet::local_platform() { return local_; }

std::shared_ptr<client::HttpPlatform> Simnet::cloud_platform() {
    if (!cloud_) {
        throw TopologyError("topology has no cloud stub");
    }
    client::HttpPlatformConfig config;
    config.kind = LayerKind::cloud;
    config.base_url = cloud_->base_url();
    config.capability_score = topology_.cloud_capability;
    return std::make_shared<client::HttpPlatform>(config);
}

std::shared_ptr<Runner> Simnet::make_runner() {
    auto runner = std::make_shared<Runner>();
    runner->register_platform(local_platform());
    if (!nodes_.empty()) {
        runner->register_platform(fog_platform());
    }
    if (cloud_) {
        runner->register_platform(cloud_platform());
    }
    return runner;
}

}  // namespace fogllm::harness
