#include "fogllm/discovery/mdns.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <cstring>
#include <map>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "fogllm/discovery/dns_codec.hpp"

namespace fogllm::discovery {

namespace {

const dns::Name kServiceName = dns::Name::from_dotted("_fogllm._tcp.local");

int open_mdns_socket(const MdnsOptions& options, bool bind_port) {
    int fd = ::socket(AF_INET, SOCK_DGRAM, 0);
    if (fd < 0) {
        throw AdvertiseFailed("cannot create udp socket");
    }
    int yes = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
#ifdef SO_REUSEPORT
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEPORT, &yes, sizeof(yes));
#endif

    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(bind_port ? options.port : 0);
    addr.sin_addr.s_addr = htonl(INADDR_ANY);
    if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        ::close(fd);
        throw AdvertiseFailed("cannot bind mdns socket");
    }

    ip_mreq mreq{};
    mreq.imr_multiaddr.s_addr = inet_addr(options.group.c_str());
    mreq.imr_interface.s_addr = inet_addr(options.interface_address.c_str());
    if (::setsockopt(fd, IPPROTO_IP, IP_ADD_MEMBERSHIP, &mreq, sizeof(mreq)) != 0) {
        mreq.imr_interface.s_addr = htonl(INADDR_ANY);
        if (::setsockopt(fd, IPPROTO_IP, IP_ADD_MEMBERSHIP, &mreq, sizeof(mreq)) != 0) {
            ::close(fd);
            throw AdvertiseFailed("cannot join multicast group " + options.group);
        }
    }

    in_addr ifaddr{};
    ifaddr.s_addr = inet_addr(options.interface_address.c_str());
    ::setsockopt(fd, IPPROTO_IP, IP_MULTICAST_IF, &ifaddr, sizeof(ifaddr));
    int loop = 1;
    ::setsockopt(fd, IPPROTO_IP, IP_MULTICAST_LOOP, &loop, sizeof(loop));
    unsigned char ttl = 255;  // mDNS convention
    ::setsockopt(fd, IPPROTO_IP, IP_MULTICAST_TTL, &ttl, sizeof(ttl));
    return fd;
}

void send_to_group(int fd, const MdnsOptions& options, const std::string& packet) {
    sockaddr_in dst{};
    dst.sin_family = AF_INET;
    dst.sin_port = htons(options.port);
    dst.sin_addr.s_addr = inet_addr(options.group.c_str());
    ::sendto(fd, packet.data(), packet.size(), 0, reinterpret_cast<sockaddr*>(&dst), sizeof(dst));
}

dns::Name instance_name_of(const std::string& instance) {
    dns::Name name;
    name.labels.push_back(instance);
    name.labels.insert(name.labels.end(), kServiceName.labels.begin(), kServiceName.labels.end());
    return name;
}

}  // namespace

MdnsLink::MdnsLink(MdnsOptions options) : options_(std::move(options)) {
    responder_fd_ = open_mdns_socket(options_, /*bind_port=*/true);
    running_ = true;
    responder_thread_ = std::thread([this] { responder_loop(); });
}

MdnsLink::~MdnsLink() {
    {
        std::lock_guard lock(mutex_);
        for (const auto& entry : entries_) {
            announce(entry, /*goodbye=*/true);
        }
        entries_.clear();
    }
    running_ = false;
    ::shutdown(responder_fd_, SHUT_RDWR);
    ::close(responder_fd_);
    if (responder_thread_.joinable()) {
        responder_thread_.join();
    }
}

void MdnsLink::send_packet(const std::string& packet) {
    send_to_group(responder_fd_, options_, packet);
}

std::string MdnsLink::build_response(const std::vector<Entry>& entries, bool goodbye) const {
    dns::Message response;
    response.flags = dns::kFlagsResponse;
    const std::uint32_t ttl = goodbye ? 0 : options_.record_ttl_s;

    for (const auto& entry : entries) {
        const dns::Name instance = instance_name_of(entry.ad.instance_name);
        const dns::Name host = dns::Name::from_dotted(entry.ad.host + ".local");

        dns::Record ptr;
        ptr.name = kServiceName;
        ptr.rtype = dns::kTypePtr;
        ptr.ttl = ttl;
        ptr.target = instance;
        response.answers.push_back(std::move(ptr));

        dns::Record srv;
        srv.name = instance;
        srv.rtype = dns::kTypeSrv;
        srv.rclass = dns::kCacheFlush;
        srv.ttl = ttl;
        srv.srv_port = entry.ad.port;
        srv.target = host;
        response.additionals.push_back(std::move(srv));

        dns::Record txt;
        txt.name = instance;
        txt.rtype = dns::kTypeTxt;
        txt.rclass = dns::kCacheFlush;
        txt.ttl = ttl;
        txt.txt = entry.ad.txt;
        response.additionals.push_back(std::move(txt));

        for (const auto& address : entry.ad.addresses) {
            dns::Record a;
            a.name = host;
            a.rtype = dns::kTypeA;
            a.rclass = dns::kCacheFlush;
            a.ttl = ttl;
            a.a_address = address;
            response.additionals.push_back(std::move(a));
        }
    }
    return dns::encode(response);
}

void MdnsLink::announce(const Entry& entry, bool goodbye) {
    const std::string packet = build_response({entry}, goodbye);
    send_to_group(responder_fd_, options_, packet);
}

void MdnsLink::responder_loop() {
    char buffer[9000];
    while (running_) {
        sockaddr_in src{};
        socklen_t src_len = sizeof(src);
        ssize_t n = ::recvfrom(responder_fd_, buffer, sizeof(buffer), 0,
                               reinterpret_cast<sockaddr*>(&src), &src_len);
        if (n <= 0) {
            if (!running_) break;
            continue;
        }

        dns::Message message;
        try {
            message = dns::decode(std::string_view(buffer, static_cast<std::size_t>(n)));
        } catch (const Error&) {
            continue;  // not ours / malformed
        }
        if (message.is_response()) continue;

        bool wants_service = false;
        for (const auto& question : message.questions) {
            if (question.qtype == dns::kTypePtr && question.name == kServiceName) {
                wants_service = true;
            }
        }
        if (!wants_service) continue;

        std::vector<Entry> snapshot;
        {
            std::lock_guard lock(mutex_);
            snapshot = entries_;
        }
        if (snapshot.empty()) continue;
        send_to_group(responder_fd_, options_, build_response(snapshot, /*goodbye=*/false));
    }
}

std::vector<std::string> MdnsLink::probe_existing_instances(std::chrono::milliseconds window) {
    // A throwaway browse with a short window; used for collision renaming.
    std::vector<std::string> names;
    try {
        for (auto& record : browse(window)) {
            names.push_back(std::move(record.instance_name));
        }
    } catch (const Error&) {
    }
    return names;
}

Registration MdnsLink::advertise(const ServiceAd& ad) {
    auto existing = probe_existing_instances(options_.probe_window);
    auto taken = [&](const std::string& name) {
        if (std::find(existing.begin(), existing.end(), name) != existing.end()) return true;
        std::lock_guard lock(mutex_);
        return std::any_of(entries_.begin(), entries_.end(),
                           [&](const Entry& e) { return e.ad.instance_name == name; });
    };

    std::string claimed = ad.instance_name;
    int suffix = 2;
    while (taken(claimed)) {
        claimed = ad.instance_name + " (" + std::to_string(suffix++) + ")";
    }

    Entry entry;
    entry.ad = ad;
    entry.ad.instance_name = claimed;
    {
        std::lock_guard lock(mutex_);
        entries_.push_back(entry);
    }

    // Unsolicited announcements, twice per RFC 6762 §8.3.
    announce(entry, /*goodbye=*/false);
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
    announce(entry, /*goodbye=*/false);

    return Registration([this, claimed] { withdraw(claimed); }, claimed);
}

void MdnsLink::withdraw(const std::string& claimed_name) {
    std::lock_guard lock(mutex_);
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const Entry& e) { return e.ad.instance_name == claimed_name; });
    if (it == entries_.end()) return;
    announce(*it, /*goodbye=*/true);
    entries_.erase(it);
}

std::vector<FogNodeRecord> MdnsLink::browse(std::chrono::milliseconds timeout) {
    int fd = open_mdns_socket(options_, /*bind_port=*/true);

    dns::Message query;
    query.questions.push_back(dns::Question{kServiceName, dns::kTypePtr, dns::kClassIn});
    send_to_group(fd, options_, dns::encode(query));

    std::map<std::string, FogNodeRecord> found;
    const auto deadline = std::chrono::steady_clock::now() + timeout;

    char buffer[9000];
    for (;;) {
        auto remaining = deadline - std::chrono::steady_clock::now();
        if (remaining <= std::chrono::milliseconds(0)) break;

        timeval tv{};
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(remaining).count();
        tv.tv_sec = us / 1000000;
        tv.tv_usec = us % 1000000;
        ::setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof(tv));

        sockaddr_in src{};
        socklen_t src_len = sizeof(src);
        ssize_t n = ::recvfrom(fd, buffer, sizeof(buffer), 0, reinterpret_cast<sockaddr*>(&src),
                               &src_len);
        if (n <= 0) continue;

        dns::Message message;
        try {
            message = dns::decode(std::string_view(buffer, static_cast<std::size_t>(n)));
        } catch (const Error&) {
            continue;
        }
        if (!message.is_response()) continue;

        // Collect every record in the packet, then correlate per instance.
        std::vector<dns::Record> records = message.answers;
        records.insert(records.end(), message.additionals.begin(), message.additionals.end());

        for (const auto& ptr : records) {
            if (ptr.rtype != dns::kTypePtr || !(ptr.name == kServiceName)) continue;
            if (ptr.target.labels.empty()) continue;
            const std::string instance = ptr.target.labels.front();

            if (ptr.ttl == 0) {  // goodbye
                found.erase(instance);
                continue;
            }

            FogNodeRecord record;
            record.instance_name = instance;

            dns::Name host;
            for (const auto& r : records) {
                if (r.rtype == dns::kTypeSrv && r.name == ptr.target) {
                    record.port = r.srv_port;
                    host = r.target;
                }
                if (r.rtype == dns::kTypeTxt && r.name == ptr.target) {
                    record.txt = r.txt;
                }
            }
            for (const auto& r : records) {
                if (r.rtype == dns::kTypeA && r.name == host) {
                    record.addresses.push_back(r.a_address);
                }
            }
            if (record.addresses.empty()) {
                char addr[INET_ADDRSTRLEN];
                inet_ntop(AF_INET, &src.sin_addr, addr, sizeof(addr));
                record.addresses.emplace_back(addr);
            }
            found[instance] = std::move(record);
        }
    }
    ::close(fd);

    std::vector<FogNodeRecord> out;
    out.reserve(found.size());
    for (auto& [name, record] : found) {
        out.push_back(std::move(record));
    }
    return out;
}

double MdnsLink::probe_rtt_ms(const FogNodeRecord& record) {
    if (record.addresses.empty() || record.port == 0) {
        throw Unreachable("record lacks resolved address/port");
    }
    httplib::SSLClient client(record.addresses.front(), record.port);
    client.enable_server_certificate_verification(false);
    client.set_connection_timeout(0, 800 * 1000);
    client.set_read_timeout(2, 0);

    const auto start = std::chrono::steady_clock::now();
    auto res = client.Get("/health");
    if (!res) {
        throw Unreachable("health probe failed: " + httplib::to_string(res.error()));
    }
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace fogllm::discovery
