#include "fogllm/client/http_platform.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <memory>

#include "fogllm/wire/request.hpp"
#include "fogllm/wire/stream.hpp"

namespace fogllm::client {

namespace {

std::unique_ptr<httplib::Client> make_client(const HttpPlatformConfig& config) {
    auto client = std::make_unique<httplib::Client>(config.base_url);
    client->set_connection_timeout(config.timeout_s);
    client->set_read_timeout(config.timeout_s);
    if (!config.ca_cert_path.empty()) {
        client->set_ca_cert_path(config.ca_cert_path);
        client->enable_server_certificate_verification(true);
    } else {
        client->enable_server_certificate_verification(false);
    }
    if (!config.bearer_token.empty()) {
        client->set_default_headers({{"Authorization", "Bearer " + config.bearer_token}});
    }
    return client;
}

[[noreturn]] void throw_for_status(int status, const std::string& body) {
    if (status == 401 || status == 403) {
        throw AuthRejected("endpoint rejected credentials (status " + std::to_string(status) +
                           "): " + body);
    }
    if (status == 502) {
        throw BackendUnavailable("endpoint backend unavailable: " + body);
    }
    throw BackendError("endpoint returned status " + std::to_string(status) + ": " + body);
}

}  // namespace

HttpPlatform::HttpPlatform(HttpPlatformConfig config)
    : config_(std::move(config)),
      descriptor_(PlatformDescriptor::make(config_.kind, config_.capability_score,
                                           config_.base_url)) {
    if (config_.base_url.empty()) {
        throw ValidationError("HttpPlatform requires base_url");
    }
}

GenerationOutcome HttpPlatform::generate(const ModelSchema& schema, const ChatContext& context,
                                         const std::vector<ToolSpec>& tools,
                                         const DeltaCallback& on_delta) {
    wire::ChatRequest request;
    request.model = schema.model_id();
    request.messages = context.entries();
    request.temperature = schema.temperature();
    request.stream = true;
    request.tools = tools;
    request.max_tokens = schema.max_output_tokens();

    auto client = make_client(config_);

    httplib::Request req;
    req.method = "POST";
    req.path = "/v1/chat/completions";
    req.body = wire::encode_request(request);
    req.set_header("Content-Type", "application/json");
    req.set_header("Accept", "text/event-stream");
    if (!config_.bearer_token.empty()) {
        req.set_header("Authorization", "Bearer " + config_.bearer_token);
    }

    wire::SseParser parser;
    wire::ChunkAssembler assembler;
    int status = 0;
    std::string error_payload;
    std::exception_ptr stream_failure;

    req.response_handler = [&](const httplib::Response& response) {
        status = response.status;
        return true;
    };
    req.content_receiver = [&](const char* data, std::size_t len, std::uint64_t, std::uint64_t) {
        if (status != 200) {
            error_payload.append(data, len);
            return true;
        }
        try {
            parser.feed(std::string_view(data, len));
            while (auto chunk = parser.next()) {
                if (chunk->delta_content && on_delta) {
                    on_delta(*chunk->delta_content);
                }
                assembler.add(*chunk);
            }
        } catch (...) {
            stream_failure = std::current_exception();
            return false;
        }
        return true;
    };

    auto res = client->send(req);
    if (stream_failure) {
        std::rethrow_exception(stream_failure);
    }
    if (!res) {
        throw BackendError("endpoint unreachable (" + config_.base_url +
                           "): " + httplib::to_string(res.error()));
    }
    if (status != 200) {
        throw_for_status(status, error_payload);
    }
    parser.finish();
    return assembler.result();
}

std::vector<std::string> HttpPlatform::list_models() {
    auto client = make_client(config_);
    auto res = client->Get("/v1/models");
    if (!res) {
        throw BackendError("endpoint unreachable: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw_for_status(res->status, res->body);
    }
    return wire::decode_model_list(res->body);
}

}  // namespace fogllm::client
