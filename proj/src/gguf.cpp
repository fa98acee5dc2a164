#include "fogllm/local/gguf.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstring>
#include <fstream>

namespace fogllm::local {

namespace {

std::string to_hex(const unsigned char* digest, std::size_t len) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (std::size_t i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    return to_hex(digest, len);
}

std::string sha256_file_hex(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path.string());
    }

    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    std::array<char, 64 * 1024> buffer;
    while (in) {
        in.read(buffer.data(), buffer.size());
        std::streamsize got = in.gcount();
        if (got > 0) {
            EVP_DigestUpdate(ctx, buffer.data(), static_cast<std::size_t>(got));
        }
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    return to_hex(digest, len);
}

ModelFile validate_model_file(const std::filesystem::path& path, std::string model_id) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open model file: " + path.string());
    }

    char magic[4];
    in.read(magic, 4);
    if (in.gcount() != 4) {
        throw IoError("file shorter than GGUF magic: " + path.string());
    }
    if (std::memcmp(magic, "GGUF", 4) != 0) {
        throw BadMagic("not a GGUF file (magic mismatch): " + path.string());
    }

    unsigned char version_bytes[4];
    in.read(reinterpret_cast<char*>(version_bytes), 4);
    if (in.gcount() != 4) {
        throw IoError("file truncated before GGUF version: " + path.string());
    }
    std::uint32_t version = static_cast<std::uint32_t>(version_bytes[0]) |
                            (static_cast<std::uint32_t>(version_bytes[1]) << 8) |
                            (static_cast<std::uint32_t>(version_bytes[2]) << 16) |
                            (static_cast<std::uint32_t>(version_bytes[3]) << 24);
    if (version != 2 && version != 3) {
        throw UnsupportedVersion("GGUF version " + std::to_string(version) +
                                 " not supported (need 2 or 3)");
    }
    in.close();

    ModelFile file;
    file.model_id = model_id.empty() ? path.stem().string() : std::move(model_id);
    file.path = path;
    file.size_bytes = std::filesystem::file_size(path);
    file.format_version = version;
    file.checksum = sha256_file_hex(path);
    return file;
}

std::string minimal_gguf_bytes(std::uint32_t version, std::string_view payload) {
    std::string bytes = "GGUF";
    for (int shift = 0; shift < 32; shift += 8) {
        bytes += static_cast<char>((version >> shift) & 0xff);
    }
    // tensor_count and metadata_kv_count, both uint64 LE zero
    bytes.append(16, '\0');
    bytes.append(payload);
    return bytes;
}

}  // namespace fogllm::local
