#include "fogllm/discovery/simlink.hpp"

#include <algorithm>
#include <thread>

namespace fogllm::discovery {

std::vector<std::string> FogNodeRecord::models() const {
    std::vector<std::string> out;
    auto it = txt.find("models");
    if (it == txt.end()) return out;
    const std::string& value = it->second;
    std::size_t pos = 0;
    while (pos <= value.size()) {
        std::size_t comma = value.find(',', pos);
        std::size_t end = (comma == std::string::npos) ? value.size() : comma;
        if (end > pos) out.push_back(value.substr(pos, end - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Registration SimulatedLink::advertise(const ServiceAd& ad) {
    std::lock_guard lock(mutex_);

    // DNS-SD collision renaming: "name", "name (2)", "name (3)", ...
    std::string claimed = ad.instance_name;
    int suffix = 2;
    auto taken = [&](const std::string& name) {
        return std::any_of(entries_.begin(), entries_.end(),
                           [&](const Entry& e) { return e.ad.instance_name == name; });
    };
    while (taken(claimed)) {
        claimed = ad.instance_name + " (" + std::to_string(suffix++) + ")";
    }

    Entry entry;
    entry.ad = ad;
    entry.ad.instance_name = claimed;
    entries_.push_back(std::move(entry));

    return Registration([this, claimed] { withdraw(claimed); }, claimed);
}

void SimulatedLink::withdraw(const std::string& instance_name) {
    std::lock_guard lock(mutex_);
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                  [&](const Entry& e) { return e.ad.instance_name == instance_name; }),
                   entries_.end());
}

std::vector<FogNodeRecord> SimulatedLink::browse(std::chrono::milliseconds timeout) {
    // The snapshot is taken when the window closes, so registrations and
    // withdrawals during the browse are reflected.
    std::this_thread::sleep_for(std::min(timeout, std::chrono::milliseconds(20)));

    std::lock_guard lock(mutex_);
    std::vector<FogNodeRecord> records;
    records.reserve(entries_.size());
    for (const auto& entry : entries_) {
        FogNodeRecord record;
        record.instance_name = entry.ad.instance_name;
        record.addresses = entry.ad.addresses.empty() ? std::vector<std::string>{"127.0.0.1"}
                                                      : entry.ad.addresses;
        record.port = entry.ad.port;
        record.txt = entry.ad.txt;
        records.push_back(std::move(record));
    }
    return records;
}

double SimulatedLink::probe_rtt_ms(const FogNodeRecord& record) {
    std::lock_guard lock(mutex_);
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) {
        return e.ad.instance_name == record.instance_name;
    });
    if (it == entries_.end()) {
        throw Unreachable("instance no longer advertised: " + record.instance_name);
    }
    if (it->probe_profile.empty()) {
        throw Unreachable("instance configured unreachable: " + record.instance_name);
    }
    double rtt = it->probe_profile[it->next_probe % it->probe_profile.size()];
    ++it->next_probe;
    return rtt;
}

void SimulatedLink::set_probe_profile(const std::string& instance_name,
                                      std::vector<double> rtt_ms_sequence) {
    std::lock_guard lock(mutex_);
    for (auto& entry : entries_) {
        if (entry.ad.instance_name == instance_name) {
            entry.probe_profile = std::move(rtt_ms_sequence);
            entry.next_probe = 0;
            return;
        }
    }
    throw Unreachable("no such instance: " + instance_name);
}

std::size_t SimulatedLink::advertised_count() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

}  // namespace fogllm::discovery
