#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fogllm/errors.hpp"

namespace fogllm::node {

/// Claims carried by a fog-layer bearer token. Scopes must include
/// "llm:infer" for inference access.
struct AuthClaims {
    std::string issuer;
    std::string audience;
    std::int64_t expiry = 0;  // UNIX seconds
    std::vector<std::string> scopes;

    bool has_scope(const std::string& scope) const;

    bool operator==(const AuthClaims&) const = default;
};

inline constexpr const char* kInferScope = "llm:infer";

std::string base64url_encode(std::string_view bytes);
std::string base64url_decode(std::string_view text);  // throws AuthError(401) on bad input

/// Mints an HS256 token. The key abstraction admits asymmetric algorithms
/// later; HS256 is the deployed choice.
std::string jwt_mint(const AuthClaims& claims, const std::string& key);

/// Verifies signature and expiry. Audience/scope checks live in authorize()
/// because their rejection maps to 403 rather than 401. Throws AuthError(401)
/// for structural, signature, or expiry failures.
AuthClaims jwt_verify(const std::string& token, const std::string& key, std::int64_t now);

/// Full bearer check: signature, expiry, then audience and scope. Throws
/// AuthError(401) for a missing/invalid/expired token and AuthError(403) for
/// an audience or scope mismatch.
AuthClaims authorize_bearer(const std::string& authorization_header, const std::string& key,
                            const std::string& expected_audience, std::int64_t now);

}  // namespace fogllm::node
