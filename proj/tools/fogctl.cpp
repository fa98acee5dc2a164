#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fogllm/bench/bench.hpp"
#include "fogllm/client/http_platform.hpp"
#include "fogllm/core/runner.hpp"
#include "fogllm/discovery/mdns.hpp"
#include "fogllm/discovery/select.hpp"
#include "fogllm/dispatch/policy.hpp"
#include "fogllm/harness/simnet.hpp"
#include "fogllm/local/models.hpp"
#include "fogllm/local/platform.hpp"
#include "fogllm/node/jwt.hpp"

using nlohmann::ordered_json;

namespace {

// Exit codes shared with the docs: 2 no platform, 3 auth, 4 bench failure.
constexpr int kExitNoPlatform = 2;
constexpr int kExitAuth = 3;
constexpr int kExitBenchFailed = 4;

std::string env_or(const char* name, const std::string& fallback = {}) {
    const char* value = std::getenv(name);
    return value ? value : fallback;
}

/// Either a simnet harness (when --simnet is given) or the real environment.
struct Context {
    std::unique_ptr<fogllm::harness::Simnet> simnet;
    std::unique_ptr<fogllm::discovery::MdnsLink> mdns;

    fogllm::discovery::ServiceLink& service_link() {
        if (simnet) return simnet->link();
        if (!mdns) mdns = std::make_unique<fogllm::discovery::MdnsLink>();
        return *mdns;
    }

    static Context make(const std::string& simnet_topology) {
        Context ctx;
        if (!simnet_topology.empty()) {
            ctx.simnet = std::make_unique<fogllm::harness::Simnet>(
                fogllm::harness::topology_from_file(simnet_topology));
        }
        return ctx;
    }

    std::shared_ptr<fogllm::Platform> platform_for(fogllm::LayerKind kind) {
        using fogllm::LayerKind;
        if (simnet) {
            switch (kind) {
                case LayerKind::local: return simnet->local_platform();
                case LayerKind::fog: return simnet->fog_platform(env_or("FOGLLM_TOKEN"));
                case LayerKind::cloud: return simnet->cloud_platform();
            }
        }
        switch (kind) {
            case LayerKind::local:
                return std::make_shared<fogllm::local::LocalPlatform>(nullptr);
            case LayerKind::fog: {
                auto& link = service_link();
                auto records =
                    fogllm::discovery::browse_and_resolve(link, std::chrono::milliseconds(1500));
                auto measured = fogllm::discovery::probe_all(records, link);
                auto nearest = fogllm::discovery::select_node(measured);
                fogllm::client::HttpPlatformConfig config;
                config.kind = LayerKind::fog;
                config.base_url = "https://" + nearest.addresses.front() + ":" +
                                  std::to_string(nearest.port);
                config.bearer_token = env_or("FOGLLM_TOKEN");
                config.ca_cert_path = env_or("FOGLLM_CA_CERT");
                return std::make_shared<fogllm::client::HttpPlatform>(config);
            }
            case LayerKind::cloud: {
                fogllm::client::HttpPlatformConfig config;
                config.kind = LayerKind::cloud;
                config.base_url = env_or("OPENAI_API_BASE", "https://api.openai.com");
                config.bearer_token = env_or("OPENAI_API_KEY");
                config.capability_score = 3;
                return std::make_shared<fogllm::client::HttpPlatform>(config);
            }
        }
        throw fogllm::NoPlatformAvailable("unknown layer");
    }

    std::vector<std::shared_ptr<fogllm::Platform>> inventory() {
        std::vector<std::shared_ptr<fogllm::Platform>> platforms;
        for (auto kind :
             {fogllm::LayerKind::local, fogllm::LayerKind::fog, fogllm::LayerKind::cloud}) {
            try {
                platforms.push_back(platform_for(kind));
            } catch (const fogllm::Error&) {
                // Layer not available in this environment; skip it.
            }
        }
        return platforms;
    }
};

int cmd_discover(const std::string& simnet_topology, int timeout_ms, bool as_json) {
    auto ctx = Context::make(simnet_topology);
    auto& link = ctx.service_link();

    auto records =
        fogllm::discovery::browse_and_resolve(link, std::chrono::milliseconds(timeout_ms));
    auto measured = fogllm::discovery::probe_all(records, link);
    std::sort(measured.begin(), measured.end(), [](const auto& a, const auto& b) {
        if (*a.proximity_rtt_ms != *b.proximity_rtt_ms) {
            return *a.proximity_rtt_ms < *b.proximity_rtt_ms;
        }
        return a.instance_name < b.instance_name;
    });

    if (as_json) {
        ordered_json out;
        ordered_json nodes = ordered_json::array();
        for (const auto& r : measured) {
            ordered_json n;
            n["instance"] = r.instance_name;
            n["address"] = r.addresses.empty() ? "" : r.addresses.front();
            n["port"] = r.port;
            n["rtt_ms"] = *r.proximity_rtt_ms;
            n["models"] = r.models();
            nodes.push_back(std::move(n));
        }
        out["nodes"] = std::move(nodes);
        std::printf("%s\n", out.dump().c_str());
        return 0;
    }

    std::printf("%-24s %-16s %-6s %-9s %s\n", "INSTANCE", "ADDRESS", "PORT", "RTT(ms)", "MODELS");
    for (const auto& r : measured) {
        std::string models;
        for (const auto& m : r.models()) {
            if (!models.empty()) models += ',';
            models += m;
        }
        std::printf("%-24s %-16s %-6u %-9.1f %s\n", r.instance_name.c_str(),
                    r.addresses.empty() ? "" : r.addresses.front().c_str(), r.port,
                    *r.proximity_rtt_ms, models.c_str());
    }
    std::printf("%zu nodes\n", measured.size());
    return 0;
}

int cmd_chat(const std::string& simnet_topology, const std::string& layer,
             const std::string& policy_file, const std::string& model_id, int max_tokens,
             const std::string& message) {
    auto ctx = Context::make(simnet_topology);

    std::shared_ptr<fogllm::Platform> platform;
    if (layer == "auto") {
        fogllm::dispatch::DispatchPolicy policy;
        if (!policy_file.empty()) {
            policy = fogllm::dispatch::policy_from_file(policy_file);
        } else {
            policy.rules.push_back({"chat", 1, 0});
        }
        platform = fogllm::dispatch::dispatch(policy, "chat", ctx.inventory());
    } else {
        platform = ctx.platform_for(fogllm::layer_kind_from_string(layer));
    }

    fogllm::SamplingParams sampling;
    sampling.max_output_tokens = max_tokens;
    fogllm::ModelSchema schema = fogllm::make_schema(model_id, sampling);
    fogllm::InferenceSession session(schema, platform);
    session.generate(fogllm::user_message(message), {}, [](std::string_view delta) {
        std::fwrite(delta.data(), 1, delta.size(), stdout);
        std::fflush(stdout);
    });
    std::printf("\nplatform: %s\n", to_string(platform->descriptor().kind).c_str());
    return 0;
}

int cmd_token_mint(const std::string& key, std::int64_t ttl_s,
                   const std::vector<std::string>& scopes, const std::string& audience,
                   const std::string& issuer) {
    fogllm::node::AuthClaims claims;
    claims.issuer = issuer;
    claims.audience = audience;
    claims.expiry = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::system_clock::now().time_since_epoch())
                        .count() +
                    ttl_s;
    claims.scopes = scopes;
    std::printf("%s\n", fogllm::node::jwt_mint(claims, key).c_str());
    return 0;
}

int cmd_bench(const std::string& simnet_topology, const std::string& platform_kind,
              const std::string& prompt, int runs, int max_tokens, const std::string& model_id,
              bool as_json) {
    auto ctx = Context::make(simnet_topology);
    auto platform = ctx.platform_for(fogllm::layer_kind_from_string(platform_kind));

    fogllm::SamplingParams sampling;
    sampling.max_output_tokens = max_tokens;
    fogllm::ModelSchema schema = fogllm::make_schema(model_id, sampling);

    fogllm::bench::BenchReport report;
    try {
        report = fogllm::bench::run_bench(*platform, schema, prompt, runs);
    } catch (const fogllm::Error& e) {
        std::fprintf(stderr, "bench run failed: %s\n", e.what());
        return kExitBenchFailed;
    }

    if (as_json) {
        std::printf("%s\n", fogllm::bench::bench_report_json(report).c_str());
    } else {
        std::printf("%s", fogllm::bench::bench_report_table(report).c_str());
    }
    return 0;
}

int cmd_model_download(const std::string& root, const std::string& model_id,
                       const std::string& url, const std::string& checksum) {
    fogllm::local::ModelCatalog catalog(root);
    auto file = catalog.download(model_id, url, checksum);
    std::printf("%s  %s  %llu bytes  sha256=%s\n", file.model_id.c_str(),
                file.path.string().c_str(), static_cast<unsigned long long>(file.size_bytes),
                file.checksum.c_str());
    return 0;
}

int cmd_model_list(const std::string& root, bool as_json) {
    fogllm::local::ModelCatalog catalog(root);
    auto files = catalog.list();
    if (as_json) {
        ordered_json out = ordered_json::array();
        for (const auto& f : files) {
            ordered_json m;
            m["model_id"] = f.model_id;
            m["size_bytes"] = f.size_bytes;
            m["format_version"] = f.format_version;
            m["checksum"] = f.checksum;
            out.push_back(std::move(m));
        }
        std::printf("%s\n", out.dump().c_str());
        return 0;
    }
    for (const auto& f : files) {
        std::printf("%-20s v%u  %llu bytes  %s\n", f.model_id.c_str(), f.format_version,
                    static_cast<unsigned long long>(f.size_bytes), f.checksum.c_str());
    }
    std::printf("%zu models; supported families:", files.size());
    for (const auto& fam : fogllm::local::supported_models()) {
        std::printf(" %s", fam.family.c_str());
    }
    std::printf("\n");
    return 0;
}

int cmd_model_verify(const std::string& root) {
    fogllm::local::ModelCatalog catalog(root);
    auto quarantined = catalog.startup_quarantined();
    auto later = catalog.revalidate();
    quarantined.insert(quarantined.end(), later.begin(), later.end());
    if (quarantined.empty()) {
        std::printf("all catalog entries valid\n");
    } else {
        for (const auto& id : quarantined) {
            std::printf("quarantined: %s\n", id.c_str());
        }
    }
    return quarantined.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fogllm operator tool"};
    app.require_subcommand(1);

    std::string simnet_topology;
    app.add_option("--simnet", simnet_topology,
                   "run against an in-process simulated network from a topology JSON")
        ->envname("FOGLLM_SIMNET");

    // discover
    auto* discover = app.add_subcommand("discover", "browse for fog nodes");
    int timeout_ms = 1500;
    bool discover_json = false;
    discover->add_option("--timeout", timeout_ms, "browse window in ms");
    discover->add_flag("--json", discover_json, "machine-readable output");

    // chat
    auto* chat = app.add_subcommand("chat", "send one message and stream the reply");
    std::string layer = "auto";
    std::string policy_file;
    std::string chat_model = "llama2:7b";
    int chat_max_tokens = 64;
    std::string message;
    chat->add_option("--layer", layer, "auto|local|fog|cloud")
        ->check(CLI::IsMember({"auto", "local", "fog", "cloud"}));
    chat->add_option("--policy", policy_file, "dispatch policy JSON");
    chat->add_option("--model", chat_model, "model id");
    chat->add_option("--max-tokens", chat_max_tokens, "reply length cap");
    chat->add_option("message", message, "user message")->required();

    // token mint
    auto* token = app.add_subcommand("token", "token utilities");
    token->require_subcommand(1);
    auto* mint = token->add_subcommand("mint", "mint a dev JWT");
    std::string mint_key = env_or("FOGLLM_JWT_KEY");
    std::int64_t ttl_s = 3600;
    std::vector<std::string> scopes;
    std::string audience = "fogllm-node";
    std::string issuer = "fogctl";
    mint->add_option("--key", mint_key, "HMAC key (default: FOGLLM_JWT_KEY)");
    mint->add_option("--ttl", ttl_s, "lifetime in seconds");
    mint->add_option("--scope", scopes, "scopes (repeatable)");
    mint->add_option("--aud", audience, "audience");
    mint->add_option("--iss", issuer, "issuer");

    // bench
    auto* bench = app.add_subcommand("bench", "measure TTFT and tokens/sec");
    std::string bench_platform = "fog";
    std::string prompt = "Summarize the day in one sentence.";
    int runs = 5;
    int max_tokens = 32;
    std::string bench_model = "llama2:7b";
    bool bench_json = false;
    bench->add_option("--platform", bench_platform, "local|fog|cloud")
        ->check(CLI::IsMember({"local", "fog", "cloud"}));
    bench->add_option("--prompt", prompt, "benchmark prompt");
    bench->add_option("--runs", runs, "repetitions")->check(CLI::PositiveNumber);
    bench->add_option("--max-tokens", max_tokens, "reply length cap");
    bench->add_option("--model", bench_model, "model id");
    bench->add_flag("--json", bench_json, "machine-readable output");

    // model
    auto* model = app.add_subcommand("model", "local model catalog");
    model->require_subcommand(1);
    std::string root = env_or("FOGLLM_HOME", "fogllm-home");
    model->add_option("--root", root, "catalog root directory");
    auto* download = model->add_subcommand("download", "fetch a model into the catalog");
    std::string dl_id, dl_url, dl_checksum;
    download->add_option("--id", dl_id, "model id")->required();
    download->add_option("--url", dl_url, "source url")->required();
    download->add_option("--checksum", dl_checksum, "expected sha256")->required();
    auto* list = model->add_subcommand("list", "list cataloged models");
    bool list_json = false;
    list->add_flag("--json", list_json, "machine-readable output");
    auto* verify = model->add_subcommand("verify", "revalidate catalog entries");

    CLI11_PARSE(app, argc, argv);

    try {
        if (discover->parsed()) {
            return cmd_discover(simnet_topology, timeout_ms, discover_json);
        }
        if (chat->parsed()) {
            return cmd_chat(simnet_topology, layer, policy_file, chat_model, chat_max_tokens,
                            message);
        }
        if (mint->parsed()) {
            if (mint_key.empty()) {
                std::fprintf(stderr, "error: --key or FOGLLM_JWT_KEY required\n");
                return 1;
            }
            if (scopes.empty()) scopes = {"llm:infer"};
            return cmd_token_mint(mint_key, ttl_s, scopes, audience, issuer);
        }
        if (bench->parsed()) {
            return cmd_bench(simnet_topology, bench_platform, prompt, runs, max_tokens,
                             bench_model, bench_json);
        }
        if (download->parsed()) {
            return cmd_model_download(root, dl_id, dl_url, dl_checksum);
        }
        if (list->parsed()) {
            return cmd_model_list(root, list_json);
        }
        if (verify->parsed()) {
            return cmd_model_verify(root);
        }
        std::fprintf(stderr, "no subcommand\n");
        return 1;
    } catch (const fogllm::client::AuthRejected& e) {
        std::fprintf(stderr, "auth error: %s\n", e.what());
        return kExitAuth;
    } catch (const fogllm::AuthError& e) {
        std::fprintf(stderr, "auth error: %s\n", e.what());
        return kExitAuth;
    } catch (const fogllm::NoPlatformAvailable& e) {
        std::fprintf(stderr, "no platform: %s\n", e.what());
        return kExitNoPlatform;
    } catch (const fogllm::NoQualifiedPlatform& e) {
        std::fprintf(stderr, "no platform: %s\n", e.what());
        return kExitNoPlatform;
    } catch (const fogllm::NoNodesDiscovered& e) {
        std::fprintf(stderr, "no platform: %s\n", e.what());
        return kExitNoPlatform;
    } catch (const fogllm::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
