#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fogllm/errors.hpp"

namespace fogllm::discovery {

inline constexpr const char* kServiceType = "_fogllm._tcp";

/// A discovered fog node. proximity_rtt is set only after probing.
struct FogNodeRecord {
    std::string instance_name;
    std::vector<std::string> addresses;
    std::uint16_t port = 0;
    std::map<std::string, std::string> txt;
    std::optional<double> proximity_rtt_ms;

    std::vector<std::string> models() const;  // parsed from txt["models"]

    bool operator==(const FogNodeRecord&) const = default;
};

/// What a node publishes about itself.
struct ServiceAd {
    std::string instance_name;
    std::string host;  // registered target host
    std::vector<std::string> addresses;
    std::uint16_t port = 0;
    std::map<std::string, std::string> txt;
};

/// Handle keeping a registration alive; withdrawing happens on destruction.
/// Must not outlive the link that issued it.
class Registration {
public:
    Registration() = default;
    Registration(std::function<void()> withdraw, std::string claimed_name)
        : withdraw_(std::move(withdraw)), claimed_name_(std::move(claimed_name)) {}
    ~Registration() { withdraw(); }

    Registration(Registration&& other) noexcept { *this = std::move(other); }
    Registration& operator=(Registration&& other) noexcept {
        if (this != &other) {
            withdraw();
            withdraw_ = std::move(other.withdraw_);
            claimed_name_ = std::move(other.claimed_name_);
            other.withdraw_ = nullptr;
        }
        return *this;
    }
    Registration(const Registration&) = delete;
    Registration& operator=(const Registration&) = delete;

    /// Instance name actually claimed (collision renaming may apply " (2)").
    const std::string& claimed_name() const { return claimed_name_; }

    void withdraw() {
        if (withdraw_) {
            withdraw_();
            withdraw_ = nullptr;
        }
    }

private:
    std::function<void()> withdraw_;
    std::string claimed_name_;
};

/// One local-link service directory. Two implementations satisfy the same
/// contract: the real mDNS/DNS-SD link and the in-process simulated link the
/// test harness and simnet CLI use.
class ServiceLink {
public:
    virtual ~ServiceLink() = default;

    /// Publishes the ad. When the instance name is already claimed the
    /// registration deterministically renames to "<name> (2)", "<name> (3)",
    /// ... per DNS-SD conventions. Throws AdvertiseFailed.
    virtual Registration advertise(const ServiceAd& ad) = 0;

    /// Every instance visible within the timeout window, each exactly once.
    /// An empty list is a valid outcome.
    virtual std::vector<FogNodeRecord> browse(std::chrono::milliseconds timeout) = 0;

    /// One proximity probe against the record (TCP connect round trip on the
    /// real link, configured latency on the simulated one). Throws
    /// Unreachable.
    virtual double probe_rtt_ms(const FogNodeRecord& record) = 0;
};

}  // namespace fogllm::discovery
