#pragma once

#include <string>
#include <vector>

#include "fogllm/errors.hpp"

namespace fogllm::node {

/// Writes a fresh self-signed certificate + private key (PEM, EC P-256) for
/// LAN deployments where clients pin the certificate directly. Throws IoError
/// on failure. scripts/gen_certs.sh is the operator-facing equivalent.
void write_self_signed_cert(const std::string& cert_path, const std::string& key_path,
                            const std::string& common_name = "fogllm-node",
                            const std::vector<std::string>& san_dns = {"localhost"},
                            const std::vector<std::string>& san_ips = {"127.0.0.1"},
                            int days_valid = 365);

}  // namespace fogllm::node
