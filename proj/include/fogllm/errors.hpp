#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fogllm {

/// Base of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// core-runtime
struct RangeError : Error { using Error::Error; };
struct NoPlatformAvailable : Error { using Error::Error; };
struct ConcurrentGeneration : Error { using Error::Error; };
struct BackendError : Error { using Error::Error; };
struct BudgetTooSmall : Error { using Error::Error; };

// wire protocol
struct ValidationError : Error { using Error::Error; };
struct StreamProtocolError : Error { using Error::Error; };
struct TruncatedStream : Error { using Error::Error; };

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at byte " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// tool calling
struct DuplicateTool : Error { using Error::Error; };
struct ToolLoopExceeded : Error { using Error::Error; };

// fog node
struct AdvertiseFailed : Error { using Error::Error; };

/// Bearer token rejected. http_status is 401 (unauthorized) or 403 (forbidden).
class AuthError : public Error {
public:
    AuthError(int http_status, const std::string& what) : Error(what), http_status_(http_status) {}
    int http_status() const { return http_status_; }

private:
    int http_status_;
};

struct BackendUnavailable : Error { using Error::Error; };

// discovery / dispatch
struct Unreachable : Error { using Error::Error; };
struct NoNodesDiscovered : Error { using Error::Error; };
struct NoQualifiedPlatform : Error { using Error::Error; };
struct UnknownTaskClass : Error { using Error::Error; };

class PipelineStageError : public Error {
public:
    PipelineStageError(std::size_t stage_index, const std::string& what)
        : Error("stage " + std::to_string(stage_index) + ": " + what), stage_index_(stage_index) {}
    std::size_t stage_index() const { return stage_index_; }

private:
    std::size_t stage_index_;
};

// local platform
struct QueueFull : Error { using Error::Error; };
struct ModelMissing : Error { using Error::Error; };
struct BadMagic : Error { using Error::Error; };
struct UnsupportedVersion : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct ChecksumMismatch : Error { using Error::Error; };
struct NetworkError : Error { using Error::Error; };

// cli harness
struct TopologyError : Error { using Error::Error; };

}  // namespace fogllm
