#include "fogllm/node/server.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fogllm/node/jwt.hpp"

namespace fogllm::node {

using nlohmann::json;

namespace {

std::string error_body(const std::string& message) {
    json j;
    j["error"] = {{"message", message}};
    return j.dump();
}

std::int64_t unix_now() {
    return std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

}  // namespace

NodeConfig load_node_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("bad node config: ") + e.what());
    }

    NodeConfig config;
    config.instance_name = j.value("instance_name", config.instance_name);
    config.bind_host = j.value("bind_host", config.bind_host);
    config.port = j.value("port", 0);
    if (config.port < 1 || config.port > 65535) {
        throw ValidationError("port must be within [1,65535]");
    }
    config.cert_chain_path = j.value("cert_chain", "");
    config.private_key_path = j.value("private_key", "");
    config.jwt_verification_key = j.value("jwt_verification_key", "");
    config.jwt_audience = j.value("jwt_audience", config.jwt_audience);
    config.trust_tier_label = j.value("trust_tier_label", config.trust_tier_label);

    if (j.contains("advertised_models")) {
        for (const auto& m : j.at("advertised_models")) {
            config.advertised_models.push_back(m.get<std::string>());
        }
    }
    if (config.advertised_models.empty()) {
        throw ValidationError("advertised_models must be nonempty");
    }

    const json backend = j.value("backend", json{{"kind", "mock"}});
    const std::string kind = backend.value("kind", "mock");
    if (kind == "mock") {
        MockBackendSettings mock;
        mock.seed = backend.value("seed", std::uint64_t{1});
        mock.tokens_per_second = backend.value("tokens_per_second", 0.0);
        mock.first_token_delay_ms = backend.value("first_token_delay_ms", 0);
        mock.default_reply_tokens = backend.value("default_reply_tokens", 16);
        config.backend = mock;
    } else if (kind == "proxy") {
        ProxyBackendSettings proxy;
        proxy.base_url = backend.value("base_url", "");
        proxy.api_key = backend.value("api_key", "");
        proxy.max_in_flight = backend.value("max_in_flight", 4);
        if (const char* env_key = std::getenv("FOGLLM_PROXY_API_KEY")) {
            proxy.api_key = env_key;
        }
        config.backend = proxy;
    } else {
        throw ValidationError("backend.kind must be 'mock' or 'proxy'");
    }

    if (const char* env_jwt = std::getenv("FOGLLM_JWT_KEY")) {
        config.jwt_verification_key = env_jwt;
    }
    if (config.jwt_verification_key.empty()) {
        throw ValidationError("jwt_verification_key required (or FOGLLM_JWT_KEY)");
    }
    return config;
}

NodeConfig load_node_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_node_config(buffer.str());
}

struct FogNode::Impl {
    explicit Impl(const NodeConfig& config)
        : server(config.cert_chain_path.c_str(), config.private_key_path.c_str()) {}
    httplib::SSLServer server;
};

namespace {

/// Handoff between the backend worker and the chunked response writer.
struct StreamBridge {
    std::mutex mutex;
    std::condition_variable cv;
    std::deque<std::string> events;
    bool finished = false;
    std::exception_ptr failure;
    std::atomic<bool> cancelled{false};
    std::thread worker;
};

}  // namespace

FogNode::FogNode(NodeConfig config) : config_(std::move(config)) {
    if (config_.advertised_models.empty()) {
        throw ValidationError("advertised_models must be nonempty");
    }
    if (std::holds_alternative<MockBackendSettings>(config_.backend)) {
        backend_ = std::make_unique<MockBackend>(std::get<MockBackendSettings>(config_.backend),
                                                 config_.advertised_models.front());
    } else {
        backend_ = std::make_unique<ProxyBackend>(std::get<ProxyBackendSettings>(config_.backend));
    }
}

FogNode::~FogNode() { stop(); }

void FogNode::start() {
    impl_ = std::make_unique<Impl>(config_);
    auto& server = impl_->server;
    if (!server.is_valid()) {
        throw IoError("TLS listener invalid; check cert_chain/private_key paths");
    }

    // Auth gate for the inference API. /health stays open.
    server.set_pre_routing_handler([this](const httplib::Request& req, httplib::Response& res) {
        if (req.path.rfind("/v1/", 0) != 0) {
            return httplib::Server::HandlerResponse::Unhandled;
        }
        try {
            authorize_bearer(req.get_header_value("Authorization"), config_.jwt_verification_key,
                             config_.jwt_audience, unix_now());
            return httplib::Server::HandlerResponse::Unhandled;
        } catch (const AuthError& e) {
            res.status = e.http_status();
            res.set_content(error_body(e.what()), "application/json");
            return httplib::Server::HandlerResponse::Handled;
        }
    });

    server.Get("/health", [this](const httplib::Request&, httplib::Response& res) {
        json j;
        j["status"] = backend_->healthy() ? "ok" : "degraded";
        j["models"] = config_.advertised_models;
        j["uptime_s"] = uptime_s();
        res.set_content(j.dump(), "application/json");
    });

    server.Get("/v1/models", [this](const httplib::Request&, httplib::Response& res) {
        res.set_content(wire::encode_model_list(config_.advertised_models), "application/json");
    });

    server.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                               httplib::Response& res) {
        wire::ChatRequest request;
        try {
            request = wire::decode_request(req.body);
        } catch (const Error& e) {
            res.status = 400;
            res.set_content(error_body(e.what()), "application/json");
            return;
        }

        invocations_.fetch_add(1);

        if (!request.stream) {
            try {
                res.set_content(backend_->complete_body(request), "application/json");
            } catch (const TooManyInFlight& e) {
                res.status = 429;
                res.set_content(error_body(e.what()), "application/json");
            } catch (const BackendUnavailable& e) {
                res.status = 502;
                res.set_content(error_body(e.what()), "application/json");
            }
            return;
        }

        // Streamed: the backend runs on a worker and events cross a handoff
        // queue. The handler waits for the first event before committing to
        // a 200, so an upstream that fails immediately still maps to
        // 502/429 instead of a broken event stream.
        auto bridge = std::make_shared<StreamBridge>();
        auto request_copy = std::make_shared<wire::ChatRequest>(std::move(request));
        bridge->worker = std::thread([backend = backend_.get(), request_copy, bridge] {
            try {
                backend->stream_events(*request_copy, [&](std::string_view event) {
                    if (bridge->cancelled.load()) return false;
                    std::lock_guard lock(bridge->mutex);
                    bridge->events.emplace_back(event);
                    bridge->cv.notify_all();
                    return true;
                });
            } catch (...) {
                std::lock_guard lock(bridge->mutex);
                bridge->failure = std::current_exception();
            }
            std::lock_guard lock(bridge->mutex);
            bridge->finished = true;
            bridge->cv.notify_all();
        });

        {
            std::unique_lock lock(bridge->mutex);
            bridge->cv.wait(lock, [&] { return !bridge->events.empty() || bridge->finished; });
            if (bridge->events.empty() && bridge->failure) {
                lock.unlock();
                bridge->worker.join();
                try {
                    std::rethrow_exception(bridge->failure);
                } catch (const TooManyInFlight& e) {
                    res.status = 429;
                    res.set_content(error_body(e.what()), "application/json");
                } catch (const Error& e) {
                    res.status = 502;
                    res.set_content(error_body(e.what()), "application/json");
                }
                return;
            }
        }

        res.set_chunked_content_provider(
            "text/event-stream",
            [bridge](std::size_t, httplib::DataSink& sink) {
                for (;;) {
                    std::string event;
                    {
                        std::unique_lock lock(bridge->mutex);
                        bridge->cv.wait(lock, [&] {
                            return !bridge->events.empty() || bridge->finished;
                        });
                        if (bridge->events.empty()) {
                            if (bridge->failure) {
                                // Mid-stream failure: headers are out, so the
                                // error travels in-band.
                                try {
                                    std::rethrow_exception(bridge->failure);
                                } catch (const std::exception& e) {
                                    std::string in_band =
                                        "data: " + error_body(e.what()) + "\n\n";
                                    sink.write(in_band.data(), in_band.size());
                                }
                            }
                            sink.done();
                            return true;
                        }
                        event = std::move(bridge->events.front());
                        bridge->events.pop_front();
                    }
                    if (!sink.write(event.data(), event.size())) {
                        bridge->cancelled.store(true);
                        return false;
                    }
                }
            },
            [bridge](bool) {
                bridge->cancelled.store(true);
                if (bridge->worker.joinable()) {
                    bridge->worker.join();
                }
            });
    });

    const char* host = config_.bind_host.c_str();
    if (config_.port > 0) {
        if (!server.bind_to_port(host, config_.port)) {
            throw IoError("cannot bind port " + std::to_string(config_.port));
        }
        port_ = static_cast<std::uint16_t>(config_.port);
    } else {
        int bound = server.bind_to_any_port(host);
        if (bound <= 0) {
            throw IoError("cannot bind an ephemeral port");
        }
        port_ = static_cast<std::uint16_t>(bound);
    }

    serve_thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
    server.wait_until_ready();
    started_at_ = std::chrono::steady_clock::now();
}

void FogNode::stop() {
    if (impl_) {
        impl_->server.stop();
    }
    if (serve_thread_.joinable()) {
        serve_thread_.join();
    }
    impl_.reset();
}

std::string FogNode::endpoint() const {
    return "https://127.0.0.1:" + std::to_string(port_);
}

std::int64_t FogNode::uptime_s() const {
    if (started_at_ == std::chrono::steady_clock::time_point{}) return 0;
    return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() -
                                                            started_at_)
        .count();
}

discovery::ServiceAd FogNode::service_ad() const {
    discovery::ServiceAd ad;
    ad.instance_name = config_.instance_name;
    ad.host = "localhost";
    ad.addresses = {"127.0.0.1"};
    ad.port = port_;
    std::string models;
    for (const auto& m : config_.advertised_models) {
        if (!models.empty()) models += ',';
        models += m;
    }
    ad.txt = {{"api", "v1"}, {"models", models}, {"tier", config_.trust_tier_label}};
    return ad;
}

discovery::Registration FogNode::advertise(discovery::ServiceLink& link) {
    if (port_ == 0) {
        throw AdvertiseFailed("node is not listening");
    }
    return link.advertise(service_ad());
}

}  // namespace fogllm::node
