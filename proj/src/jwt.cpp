#include "fogllm/node/jwt.hpp"

#include <openssl/hmac.h>

#include <nlohmann/json.hpp>

namespace fogllm::node {

using nlohmann::json;

namespace {

constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";

int decode_char(char c) {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '-') return 62;
    if (c == '_') return 63;
    return -1;
}

std::string hmac_sha256(std::string_view key, std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
         reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest, &len);
    return std::string(reinterpret_cast<char*>(digest), len);
}

bool constant_time_equal(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    unsigned char diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff |= static_cast<unsigned char>(a[i]) ^ static_cast<unsigned char>(b[i]);
    }
    return diff == 0;
}

}  // namespace

bool AuthClaims::has_scope(const std::string& scope) const {
    for (const auto& s : scopes) {
        if (s == scope) return true;
    }
    return false;
}

std::string base64url_encode(std::string_view bytes) {
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    std::size_t i = 0;
    while (i + 3 <= bytes.size()) {
        std::uint32_t n = (static_cast<unsigned char>(bytes[i]) << 16) |
                          (static_cast<unsigned char>(bytes[i + 1]) << 8) |
                          static_cast<unsigned char>(bytes[i + 2]);
        out += kAlphabet[(n >> 18) & 63];
        out += kAlphabet[(n >> 12) & 63];
        out += kAlphabet[(n >> 6) & 63];
        out += kAlphabet[n & 63];
        i += 3;
    }
    std::size_t rest = bytes.size() - i;
    if (rest == 1) {
        std::uint32_t n = static_cast<unsigned char>(bytes[i]) << 16;
        out += kAlphabet[(n >> 18) & 63];
        out += kAlphabet[(n >> 12) & 63];
    } else if (rest == 2) {
        std::uint32_t n = (static_cast<unsigned char>(bytes[i]) << 16) |
                          (static_cast<unsigned char>(bytes[i + 1]) << 8);
        out += kAlphabet[(n >> 18) & 63];
        out += kAlphabet[(n >> 12) & 63];
        out += kAlphabet[(n >> 6) & 63];
    }
    return out;  // unpadded, per RFC 7515
}

std::string base64url_decode(std::string_view text) {
    std::string out;
    out.reserve(text.size() * 3 / 4);
    std::uint32_t acc = 0;
    int bits = 0;
    for (char c : text) {
        int v = decode_char(c);
        if (v < 0) {
            throw AuthError(401, "invalid base64url content");
        }
        acc = (acc << 6) | static_cast<std::uint32_t>(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out += static_cast<char>((acc >> bits) & 0xff);
        }
    }
    return out;
}

std::string jwt_mint(const AuthClaims& claims, const std::string& key) {
    json header = {{"alg", "HS256"}, {"typ", "JWT"}};

    std::string scope;
    for (const auto& s : claims.scopes) {
        if (!scope.empty()) scope += ' ';
        scope += s;
    }
    json payload = {{"iss", claims.issuer},
                    {"aud", claims.audience},
                    {"exp", claims.expiry},
                    {"scope", scope}};

    std::string signing_input =
        base64url_encode(header.dump()) + "." + base64url_encode(payload.dump());
    return signing_input + "." + base64url_encode(hmac_sha256(key, signing_input));
}

AuthClaims jwt_verify(const std::string& token, const std::string& key, std::int64_t now) {
    std::size_t dot1 = token.find('.');
    std::size_t dot2 = token.rfind('.');
    if (dot1 == std::string::npos || dot2 == dot1) {
        throw AuthError(401, "malformed token");
    }

    std::string signing_input = token.substr(0, dot2);
    std::string signature = base64url_decode(token.substr(dot2 + 1));
    if (!constant_time_equal(signature, hmac_sha256(key, signing_input))) {
        throw AuthError(401, "signature mismatch");
    }

    json header, payload;
    try {
        header = json::parse(base64url_decode(token.substr(0, dot1)));
        payload = json::parse(base64url_decode(token.substr(dot1 + 1, dot2 - dot1 - 1)));
    } catch (const json::parse_error&) {
        throw AuthError(401, "malformed token segments");
    }
    if (header.value("alg", "") != "HS256") {
        throw AuthError(401, "unsupported algorithm");
    }

    AuthClaims claims;
    claims.issuer = payload.value("iss", "");
    claims.audience = payload.value("aud", "");
    claims.expiry = payload.value("exp", std::int64_t{0});

    std::string scope = payload.value("scope", "");
    std::size_t pos = 0;
    while (pos < scope.size()) {
        std::size_t space = scope.find(' ', pos);
        std::size_t end = (space == std::string::npos) ? scope.size() : space;
        if (end > pos) claims.scopes.push_back(scope.substr(pos, end - pos));
        pos = end + 1;
    }

    if (claims.expiry <= now) {
        throw AuthError(401, "token expired");
    }
    return claims;
}

AuthClaims authorize_bearer(const std::string& authorization_header, const std::string& key,
                            const std::string& expected_audience, std::int64_t now) {
    constexpr std::string_view kBearer = "Bearer ";
    if (authorization_header.empty()) {
        throw AuthError(401, "missing Authorization header");
    }
    if (authorization_header.rfind(kBearer.data(), 0) != 0) {
        throw AuthError(401, "Authorization header is not a bearer token");
    }
    AuthClaims claims = jwt_verify(authorization_header.substr(kBearer.size()), key, now);
    if (claims.audience != expected_audience) {
        throw AuthError(403, "audience mismatch");
    }
    if (!claims.has_scope(kInferScope)) {
        throw AuthError(403, "missing scope " + std::string(kInferScope));
    }
    return claims;
}

}  // namespace fogllm::node
