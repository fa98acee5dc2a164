#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "fogllm/errors.hpp"

namespace fogllm::local {

/// A validated local model file.
struct ModelFile {
    std::string model_id;
    std::filesystem::path path;
    std::uint64_t size_bytes = 0;
    std::uint32_t format_version = 0;  // GGUF container version
    std::string checksum;              // SHA-256 hex
};

/// Checks the GGUF container header: 4-byte magic "GGUF" then a little-endian
/// uint32 version in {2,3}. Also computes the file checksum. Throws BadMagic,
/// UnsupportedVersion, or IoError.
ModelFile validate_model_file(const std::filesystem::path& path, std::string model_id = {});

std::string sha256_file_hex(const std::filesystem::path& path);
std::string sha256_hex(std::string_view bytes);

/// Builds a minimal syntactically valid GGUF header (magic, version, zero
/// tensor and metadata counts) followed by payload bytes.
std::string minimal_gguf_bytes(std::uint32_t version, std::string_view payload = {});

}  // namespace fogllm::local
