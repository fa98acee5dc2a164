#include "fogllm/node/backend.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <chrono>
#include <thread>

#include "fogllm/core/mock.hpp"

namespace fogllm::node {

namespace {

// Fingerprint ignores the stream flag so both transports produce the same
// reply for the same request.
std::uint64_t request_fingerprint(const wire::ChatRequest& request) {
    wire::ChatRequest normalized = request;
    normalized.stream = false;
    return fnv1a64(wire::encode_request(normalized));
}

}  // namespace

MockBackend::MockBackend(MockBackendSettings settings, std::string model_id)
    : settings_(settings), model_id_(std::move(model_id)) {}

std::vector<std::string> MockBackend::reply_tokens(const wire::ChatRequest& request) const {
    int count = request.max_tokens.value_or(settings_.default_reply_tokens);
    if (count < 0) count = 0;
    return seeded_reply_tokens(settings_.seed, request_fingerprint(request),
                               static_cast<std::size_t>(count));
}

std::string MockBackend::complete_body(const wire::ChatRequest& request) {
    auto tokens = reply_tokens(request);
    std::string content;
    for (const auto& t : tokens) content += t;

    wire::CompletionResponse response;
    char idbuf[32];
    std::snprintf(idbuf, sizeof(idbuf), "mock-%016llx",
                  static_cast<unsigned long long>(request_fingerprint(request) ^ settings_.seed));
    response.id = idbuf;
    response.model = model_id_.empty() ? request.model : model_id_;
    response.message = assistant_message(std::move(content));
    response.finish = FinishReason::stop;
    return wire::encode_response(response);
}

void MockBackend::stream_events(const wire::ChatRequest& request, const EventSink& emit) {
    using namespace std::chrono;

    auto tokens = reply_tokens(request);
    const auto pacing_gap =
        settings_.tokens_per_second > 0.0
            ? duration_cast<steady_clock::duration>(duration<double>(1.0 / settings_.tokens_per_second))
            : steady_clock::duration::zero();

    auto next_emit = steady_clock::now();
    if (settings_.first_token_delay_ms > 0) {
        next_emit += milliseconds(settings_.first_token_delay_ms);
    } else {
        next_emit += pacing_gap;
    }

    for (std::size_t i = 0; i < tokens.size(); ++i) {
        std::this_thread::sleep_until(next_emit);
        next_emit += pacing_gap;
        wire::StreamChunk chunk;
        chunk.delta_content = tokens[i];
        if (!emit(wire::encode_sse_event(chunk))) return;
    }

    wire::StreamChunk final_chunk;
    final_chunk.finish_reason = FinishReason::stop;
    if (!emit(wire::encode_sse_event(final_chunk))) return;
    emit(wire::kSseDone);
}

class ProxyBackend::InFlightGuard {
public:
    InFlightGuard(std::mutex& mutex, int& count, int limit) : mutex_(mutex), count_(count) {
        std::lock_guard lock(mutex_);
        if (count_ >= limit) {
            throw TooManyInFlight("proxy backend at max in-flight (" + std::to_string(limit) + ")");
        }
        ++count_;
    }
    ~InFlightGuard() {
        std::lock_guard lock(mutex_);
        --count_;
    }

private:
    std::mutex& mutex_;
    int& count_;
};

ProxyBackend::ProxyBackend(ProxyBackendSettings settings) : settings_(std::move(settings)) {
    if (settings_.base_url.empty()) {
        throw ValidationError("proxy backend requires base_url");
    }
}

std::string ProxyBackend::complete_body(const wire::ChatRequest& request) {
    InFlightGuard guard(mutex_, in_flight_, settings_.max_in_flight);

    httplib::Client client(settings_.base_url);
    client.set_connection_timeout(settings_.timeout_s);
    client.set_read_timeout(settings_.timeout_s);
    httplib::Headers headers;
    if (!settings_.api_key.empty()) {
        headers.emplace("Authorization", "Bearer " + settings_.api_key);
    }

    auto res = client.Post("/v1/chat/completions", headers, wire::encode_request(request),
                           "application/json");
    if (!res) {
        throw BackendUnavailable("proxy target unreachable: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw BackendUnavailable("proxy target returned status " + std::to_string(res->status));
    }
    return res->body;
}

void ProxyBackend::stream_events(const wire::ChatRequest& request, const EventSink& emit) {
    InFlightGuard guard(mutex_, in_flight_, settings_.max_in_flight);

    httplib::Client client(settings_.base_url);
    client.set_connection_timeout(settings_.timeout_s);
    client.set_read_timeout(settings_.timeout_s);

    httplib::Request req;
    req.method = "POST";
    req.path = "/v1/chat/completions";
    if (!settings_.api_key.empty()) {
        req.set_header("Authorization", "Bearer " + settings_.api_key);
    }
    req.set_header("Accept", "text/event-stream");
    req.body = wire::encode_request(request);
    req.set_header("Content-Type", "application/json");

    bool aborted = false;
    req.content_receiver = [&](const char* data, std::size_t len, std::uint64_t, std::uint64_t) {
        // Raw passthrough keeps upstream fields (usage, ids) intact.
        if (!emit(std::string_view(data, len))) {
            aborted = true;
            return false;
        }
        return true;
    };

    auto res = client.send(req);
    if (aborted) return;
    if (!res) {
        throw BackendUnavailable("proxy target unreachable: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw BackendUnavailable("proxy target returned status " + std::to_string(res->status));
    }
}

bool ProxyBackend::healthy() {
    httplib::Client client(settings_.base_url);
    client.set_connection_timeout(2);
    client.set_read_timeout(2);
    // Any HTTP answer counts as reachable; only transport failure degrades.
    auto res = client.Get("/v1/models");
    return static_cast<bool>(res);
}

}  // namespace fogllm::node
