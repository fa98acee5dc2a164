#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fogllm/errors.hpp"

namespace fogllm::discovery::dns {

// Record types used by DNS-SD.
inline constexpr std::uint16_t kTypeA = 1;
inline constexpr std::uint16_t kTypePtr = 12;
inline constexpr std::uint16_t kTypeTxt = 16;
inline constexpr std::uint16_t kTypeSrv = 33;
inline constexpr std::uint16_t kClassIn = 1;
inline constexpr std::uint16_t kCacheFlush = 0x8001;
inline constexpr std::uint16_t kFlagsResponse = 0x8400;  // QR | AA

/// Dotted name as a label sequence; labels may contain any bytes (DNS-SD
/// instance names include spaces).
struct Name {
    std::vector<std::string> labels;

    static Name from_dotted(const std::string& dotted);
    std::string to_dotted() const;
    bool ends_with(const Name& suffix) const;

    bool operator==(const Name&) const = default;
};

struct Question {
    Name name;
    std::uint16_t qtype = 0;
    std::uint16_t qclass = kClassIn;

    bool operator==(const Question&) const = default;
};

/// One resource record with its typed payload decoded. Only the payload
/// matching rtype is meaningful.
struct Record {
    Name name;
    std::uint16_t rtype = 0;
    std::uint16_t rclass = kClassIn;
    std::uint32_t ttl = 120;

    Name target;                              // PTR / SRV target
    std::uint16_t srv_port = 0;               // SRV
    std::map<std::string, std::string> txt;   // TXT key=value pairs
    std::string a_address;                    // A, dotted quad

    bool operator==(const Record&) const = default;
};

struct Message {
    std::uint16_t id = 0;
    std::uint16_t flags = 0;
    std::vector<Question> questions;
    std::vector<Record> answers;      // answer section
    std::vector<Record> additionals;  // authority + additional merged

    bool is_response() const { return flags & 0x8000; }
};

std::string encode(const Message& message);

/// Throws ParseError on malformed packets. Handles compression pointers.
Message decode(std::string_view packet);

}  // namespace fogllm::discovery::dns
