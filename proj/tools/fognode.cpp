#include <chrono>
#include <csignal>
#include <cstdio>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "fogllm/discovery/mdns.hpp"
#include "fogllm/node/server.hpp"

namespace {

volatile std::sig_atomic_t g_stop = 0;

void handle_signal(int) { g_stop = 1; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fogllm inference node daemon"};
    app.require_subcommand(1);

    auto* serve = app.add_subcommand("serve", "serve the inference API and advertise it");
    std::string config_path;
    serve->add_option("--config", config_path, "node config JSON")->required();
    bool no_mdns = false;
    serve->add_flag("--no-mdns", no_mdns, "skip mDNS advertisement (serve only)");

    CLI11_PARSE(app, argc, argv);

    try {
        auto config = fogllm::node::load_node_config_file(config_path);
        fogllm::node::FogNode node(std::move(config));
        node.start();
        std::printf("fognode '%s' listening on %s\n", node.config().instance_name.c_str(),
                    node.endpoint().c_str());

        std::unique_ptr<fogllm::discovery::MdnsLink> link;
        std::unique_ptr<fogllm::discovery::Registration> registration;
        if (!no_mdns) {
            link = std::make_unique<fogllm::discovery::MdnsLink>();
            registration = std::make_unique<fogllm::discovery::Registration>(node.advertise(*link));
            std::printf("advertised as '%s' (%s)\n", registration->claimed_name().c_str(),
                        fogllm::discovery::kServiceType);
        }

        std::signal(SIGINT, handle_signal);
        std::signal(SIGTERM, handle_signal);
        while (!g_stop) {
            std::this_thread::sleep_for(std::chrono::milliseconds(200));
        }
        std::printf("shutting down\n");
        registration.reset();
        link.reset();
        node.stop();
        return 0;
    } catch (const fogllm::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
