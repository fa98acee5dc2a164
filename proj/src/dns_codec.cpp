#include "fogllm/discovery/dns_codec.hpp"

#include <cstdio>
#include <string_view>

namespace fogllm::discovery::dns {

namespace {

void put_u16(std::string& out, std::uint16_t v) {
    out += static_cast<char>((v >> 8) & 0xff);
    out += static_cast<char>(v & 0xff);
}

void put_u32(std::string& out, std::uint32_t v) {
    out += static_cast<char>((v >> 24) & 0xff);
    out += static_cast<char>((v >> 16) & 0xff);
    out += static_cast<char>((v >> 8) & 0xff);
    out += static_cast<char>(v & 0xff);
}

class Reader {
public:
    explicit Reader(std::string_view data) : data_(data) {}

    std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(data_[pos_++]);
    }
    std::uint16_t u16() {
        need(2);
        std::uint16_t v = (static_cast<std::uint8_t>(data_[pos_]) << 8) |
                          static_cast<std::uint8_t>(data_[pos_ + 1]);
        pos_ += 2;
        return v;
    }
    std::uint32_t u32() {
        std::uint32_t hi = u16();
        return (hi << 16) | u16();
    }
    std::string_view bytes(std::size_t n) {
        need(n);
        std::string_view v = data_.substr(pos_, n);
        pos_ += n;
        return v;
    }

    std::size_t pos() const { return pos_; }
    void seek(std::size_t p) { pos_ = p; }

    /// Decodes a possibly compressed name starting at the current position.
    Name name() {
        Name out;
        std::size_t jumps = 0;
        std::size_t return_pos = 0;
        bool jumped = false;
        for (;;) {
            std::uint8_t len = u8();
            if (len == 0) break;
            if ((len & 0xc0) == 0xc0) {
                if (++jumps > 64) {
                    throw ParseError("compression pointer loop", pos_);
                }
                std::size_t target = (static_cast<std::size_t>(len & 0x3f) << 8) | u8();
                if (!jumped) {
                    return_pos = pos_;
                    jumped = true;
                }
                if (target >= data_.size()) {
                    throw ParseError("compression pointer out of range", pos_);
                }
                seek(target);
                continue;
            }
            if ((len & 0xc0) != 0) {
                throw ParseError("reserved label length bits", pos_);
            }
            out.labels.emplace_back(bytes(len));
        }
        if (jumped) {
            seek(return_pos);
        }
        return out;
    }

private:
    void need(std::size_t n) const {
        if (pos_ + n > data_.size()) {
            throw ParseError("truncated dns packet", pos_);
        }
    }

    std::string_view data_;
    std::size_t pos_ = 0;
};

void encode_name(std::string& out, const Name& name) {
    for (const auto& label : name.labels) {
        if (label.empty() || label.size() > 63) {
            throw ValidationError("dns label length must be 1..63: '" + label + "'");
        }
        out += static_cast<char>(label.size());
        out += label;
    }
    out += '\0';
}

void encode_record(std::string& out, const Record& record) {
    encode_name(out, record.name);
    put_u16(out, record.rtype);
    put_u16(out, record.rclass);
    put_u32(out, record.ttl);

    std::string rdata;
    switch (record.rtype) {
        case kTypePtr:
            encode_name(rdata, record.target);
            break;
        case kTypeSrv:
            put_u16(rdata, 0);  // priority
            put_u16(rdata, 0);  // weight
            put_u16(rdata, record.srv_port);
            encode_name(rdata, record.target);
            break;
        case kTypeTxt:
            for (const auto& [key, value] : record.txt) {
                std::string pair = key + "=" + value;
                if (pair.size() > 255) {
                    throw ValidationError("txt pair too long: " + key);
                }
                rdata += static_cast<char>(pair.size());
                rdata += pair;
            }
            if (rdata.empty()) rdata += '\0';
            break;
        case kTypeA: {
            const std::string& dotted = record.a_address;
            unsigned a = 0, b = 0, c = 0, d = 0;
            if (std::sscanf(dotted.c_str(), "%u.%u.%u.%u", &a, &b, &c, &d) != 4 || a > 255 ||
                b > 255 || c > 255 || d > 255) {
                throw ValidationError("bad ipv4 address: " + dotted);
            }
            rdata += static_cast<char>(a);
            rdata += static_cast<char>(b);
            rdata += static_cast<char>(c);
            rdata += static_cast<char>(d);
            break;
        }
        default:
            throw ValidationError("unsupported record type " + std::to_string(record.rtype));
    }

    put_u16(out, static_cast<std::uint16_t>(rdata.size()));
    out += rdata;
}

Record decode_record(Reader& reader) {
    Record record;
    record.name = reader.name();
    record.rtype = reader.u16();
    record.rclass = reader.u16();
    record.ttl = reader.u32();
    std::uint16_t rdlength = reader.u16();
    std::size_t rdata_end = reader.pos() + rdlength;

    switch (record.rtype) {
        case kTypePtr:
            record.target = reader.name();
            break;
        case kTypeSrv:
            reader.u16();  // priority
            reader.u16();  // weight
            record.srv_port = reader.u16();
            record.target = reader.name();
            break;
        case kTypeTxt:
            while (reader.pos() < rdata_end) {
                std::uint8_t len = reader.u8();
                std::string pair{reader.bytes(len)};
                auto eq = pair.find('=');
                if (eq != std::string::npos) {
                    record.txt[pair.substr(0, eq)] = pair.substr(eq + 1);
                } else if (!pair.empty()) {
                    record.txt[pair] = "";
                }
            }
            break;
        case kTypeA: {
            auto quad = reader.bytes(4);
            record.a_address = std::to_string(static_cast<std::uint8_t>(quad[0])) + "." +
                               std::to_string(static_cast<std::uint8_t>(quad[1])) + "." +
                               std::to_string(static_cast<std::uint8_t>(quad[2])) + "." +
                               std::to_string(static_cast<std::uint8_t>(quad[3]));
            break;
        }
        default:
            reader.bytes(rdlength);  // skip unknown types
            break;
    }
    reader.seek(rdata_end);
    return record;
}

}  // namespace

Name Name::from_dotted(const std::string& dotted) {
    Name name;
    std::size_t pos = 0;
    while (pos < dotted.size()) {
        std::size_t dot = dotted.find('.', pos);
        std::size_t end = (dot == std::string::npos) ? dotted.size() : dot;
        if (end > pos) name.labels.push_back(dotted.substr(pos, end - pos));
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return name;
}

std::string Name::to_dotted() const {
    std::string out;
    for (const auto& label : labels) {
        if (!out.empty()) out += '.';
        out += label;
    }
    return out;
}

bool Name::ends_with(const Name& suffix) const {
    if (suffix.labels.size() > labels.size()) return false;
    std::size_t offset = labels.size() - suffix.labels.size();
    for (std::size_t i = 0; i < suffix.labels.size(); ++i) {
        if (labels[offset + i] != suffix.labels[i]) return false;
    }
    return true;
}

std::string encode(const Message& message) {
    std::string out;
    put_u16(out, message.id);
    put_u16(out, message.flags);
    put_u16(out, static_cast<std::uint16_t>(message.questions.size()));
    put_u16(out, static_cast<std::uint16_t>(message.answers.size()));
    put_u16(out, 0);
    put_u16(out, static_cast<std::uint16_t>(message.additionals.size()));

    for (const auto& question : message.questions) {
        encode_name(out, question.name);
        put_u16(out, question.qtype);
        put_u16(out, question.qclass);
    }
    for (const auto& record : message.answers) {
        encode_record(out, record);
    }
    for (const auto& record : message.additionals) {
        encode_record(out, record);
    }
    return out;
}

Message decode(std::string_view packet) {
    Reader reader(packet);
    Message message;
    message.id = reader.u16();
    message.flags = reader.u16();
    std::uint16_t qd = reader.u16();
    std::uint16_t an = reader.u16();
    std::uint16_t ns = reader.u16();
    std::uint16_t ar = reader.u16();

    for (std::uint16_t i = 0; i < qd; ++i) {
        Question question;
        question.name = reader.name();
        question.qtype = reader.u16();
        question.qclass = reader.u16();
        message.questions.push_back(std::move(question));
    }
    for (std::uint16_t i = 0; i < an; ++i) {
        message.answers.push_back(decode_record(reader));
    }
    for (std::uint16_t i = 0; i < ns + ar; ++i) {
        message.additionals.push_back(decode_record(reader));
    }
    return message;
}

}  // namespace fogllm::discovery::dns
