#pragma once

#include <openssl/hmac.h>

#include <cstdint>
#include <string>

// Independent HS256 JWT encoder used as the oracle for token verification.
// Deliberately shares no code with the library: byte/bit handling, JSON
// assembly, and base64url are all written from the RFC texts here.
namespace testsupport {

inline std::string ref_b64url(const unsigned char* data, std::size_t len) {
    static const char* table = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";
    std::string out;
    std::size_t i = 0;
    for (; i + 2 < len; i += 3) {
        out += table[data[i] >> 2];
        out += table[((data[i] & 0x03) << 4) | (data[i + 1] >> 4)];
        out += table[((data[i + 1] & 0x0f) << 2) | (data[i + 2] >> 6)];
        out += table[data[i + 2] & 0x3f];
    }
    if (i + 1 == len) {
        out += table[data[i] >> 2];
        out += table[(data[i] & 0x03) << 4];
    } else if (i + 2 == len) {
        out += table[data[i] >> 2];
        out += table[((data[i] & 0x03) << 4) | (data[i + 1] >> 4)];
        out += table[(data[i + 1] & 0x0f) << 2];
    }
    return out;
}

inline std::string ref_b64url(const std::string& text) {
    return ref_b64url(reinterpret_cast<const unsigned char*>(text.data()), text.size());
}

/// Mints {"iss","aud","exp","scope"} with hand-assembled JSON. scope is a
/// space-delimited list.
inline std::string reference_mint_jwt(const std::string& key, const std::string& issuer,
                                      const std::string& audience, std::int64_t expiry,
                                      const std::string& scope) {
    const std::string header = R"({"alg":"HS256","typ":"JWT"})";
    const std::string payload = std::string("{\"iss\":\"") + issuer + "\",\"aud\":\"" + audience +
                                "\",\"exp\":" + std::to_string(expiry) + ",\"scope\":\"" + scope +
                                "\"}";
    const std::string signing_input = ref_b64url(header) + "." + ref_b64url(payload);

    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int digest_len = 0;
    HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
         reinterpret_cast<const unsigned char*>(signing_input.data()), signing_input.size(),
         digest, &digest_len);

    return signing_input + "." + ref_b64url(digest, digest_len);
}

}  // namespace testsupport
