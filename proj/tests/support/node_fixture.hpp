#pragma once

#include <memory>
#include <string>

#include "fogllm/node/server.hpp"
#include "fogllm/node/tls.hpp"
#include "support/helpers.hpp"

namespace testsupport {

/// One TLS fog node with a mock backend on an ephemeral loopback port.
struct NodeFixture {
    static constexpr const char* kJwtKey = "node-test-key";

    explicit NodeFixture(fogllm::node::MockBackendSettings mock = {},
                         std::vector<std::string> models = {"llama2:7b"})
        : dir("fogllm-node-test") {
        cert_path = (dir.path() / "cert.pem").string();
        key_path = (dir.path() / "key.pem").string();
        fogllm::node::write_self_signed_cert(cert_path, key_path);

        fogllm::node::NodeConfig config;
        config.instance_name = "test-node";
        config.bind_host = "127.0.0.1";
        config.port = 0;
        config.cert_chain_path = cert_path;
        config.private_key_path = key_path;
        config.jwt_verification_key = kJwtKey;
        config.backend = mock;
        config.advertised_models = std::move(models);
        node = std::make_unique<fogllm::node::FogNode>(std::move(config));
        node->start();
    }

    TempDir dir;
    std::string cert_path;
    std::string key_path;
    std::unique_ptr<fogllm::node::FogNode> node;
};

}  // namespace testsupport
