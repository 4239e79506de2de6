#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fgsat {

enum class Transport : uint8_t { tcp = 6, udp = 17 };

enum class Direction : uint8_t { forward = 0, backward = 1 };

// TCP flag bits as they sit in the header's flags octet.
inline constexpr uint8_t kTcpFin = 0x01;
inline constexpr uint8_t kTcpSyn = 0x02;
inline constexpr uint8_t kTcpRst = 0x04;
inline constexpr uint8_t kTcpPsh = 0x08;
inline constexpr uint8_t kTcpAck = 0x10;
inline constexpr uint8_t kTcpUrg = 0x20;
inline constexpr uint8_t kTcpEce = 0x40;
inline constexpr uint8_t kTcpCwr = 0x80;

struct FiveTuple {
    uint32_t src_addr = 0;  // IPv4, host byte order
    uint32_t dst_addr = 0;
    uint16_t src_port = 0;
    uint16_t dst_port = 0;
    Transport proto = Transport::tcp;

    FiveTuple reversed() const {
        return {dst_addr, src_addr, dst_port, src_port, proto};
    }
    bool operator==(const FiveTuple&) const = default;
};

// Orientation-insensitive key: the lower (addr, port) endpoint first.
struct FlowKey {
    uint32_t addr_a = 0, addr_b = 0;
    uint16_t port_a = 0, port_b = 0;
    Transport proto = Transport::tcp;

    static FlowKey from(const FiveTuple& t) {
        const bool keep = (t.src_addr < t.dst_addr) ||
                          (t.src_addr == t.dst_addr && t.src_port <= t.dst_port);
        if (keep) return {t.src_addr, t.dst_addr, t.src_port, t.dst_port, t.proto};
        return {t.dst_addr, t.src_addr, t.dst_port, t.src_port, t.proto};
    }
    bool operator==(const FlowKey&) const = default;
};

struct FlowKeyHash {
    size_t operator()(const FlowKey& k) const noexcept {
        uint64_t h = 14695981039346656037ULL;
        auto mix = [&h](uint64_t v) { h = (h ^ v) * 1099511628211ULL; };
        mix((uint64_t(k.addr_a) << 32) | k.addr_b);
        mix((uint64_t(k.port_a) << 24) | (uint64_t(k.port_b) << 8) |
            uint64_t(k.proto));
        return size_t(h);
    }
};

// Transport sequencing state; absent for UDP (never zero-conflated).
struct TcpMeta {
    uint32_t seq = 0;
    uint32_t ack = 0;
    uint8_t flags = 0;

    bool has(uint8_t bit) const { return (flags & bit) != 0; }
    bool syn() const { return has(kTcpSyn); }
    bool fin() const { return has(kTcpFin); }
    bool carries_ack() const { return has(kTcpAck); }
};

// ---------------------------------------------------------------------------
// The 39-field candidate attribute vector. The index order below is the
// artifact's on-disk and in-model contract; see README for the full table.
// ---------------------------------------------------------------------------
inline constexpr size_t kAttributeCount = 39;

enum Attr : size_t {
    kAttrPacketLength = 0,
    kAttrInterArrivalUs = 1,
    kAttrDirection = 2,  // forward = 1, backward = 0
    kAttrIpVersion = 3,
    kAttrIpHeaderLen = 4,
    kAttrIpDsField = 5,
    kAttrIpTotalLength = 6,
    kAttrIpIdentification = 7,
    kAttrIpFlagDf = 8,
    kAttrIpFlagMf = 9,
    kAttrIpFragOffset = 10,  // bytes
    kAttrIpTtl = 11,
    kAttrIpProtocol = 12,
    kAttrTcpHeaderLen = 13,
    kAttrTcpFlagCwr = 14,
    kAttrTcpFlagEce = 15,
    kAttrTcpFlagUrg = 16,
    kAttrTcpFlagAck = 17,
    kAttrTcpFlagPsh = 18,
    kAttrTcpFlagRst = 19,
    kAttrTcpFlagSyn = 20,
    kAttrTcpFlagFin = 21,
    kAttrTcpWindowSize = 22,
    kAttrTcpUrgentPointer = 23,
    kAttrTcpPayloadLen = 24,
    kAttrTcpOptionsLen = 25,
    kAttrTcpMssOption = 26,
    kAttrTcpWindowScaleOption = 27,
    kAttrTcpSackPermitted = 28,
    kAttrTcpTimestampPresent = 29,
    kAttrTcpRelativeSeq = 30,
    kAttrTcpRelativeAck = 31,
    kAttrUdpLength = 32,
    kAttrUdpChecksumPresent = 33,
    kAttrSourcePort = 34,
    kAttrDestPort = 35,
    kAttrIsTcp = 36,
    kAttrCumulativeBytesInDirection = 37,
    kAttrPacketIndexInFlow = 38,
};

using AttributeVector = std::array<double, kAttributeCount>;

// Canonical attribute names, indexed by Attr.
const std::array<std::string_view, kAttributeCount>& attribute_names();

struct PacketRecord {
    uint64_t timestamp_us = 0;  // microseconds since capture epoch
    FiveTuple tuple;
    Direction direction = Direction::forward;
    std::optional<TcpMeta> tcp;  // engaged iff tuple.proto == tcp
    uint32_t payload_len = 0;    // transport payload bytes
    AttributeVector attributes{};

    bool is_tcp() const { return tuple.proto == Transport::tcp; }

    // Sequence units this packet occupies: payload, +1 if SYN or FIN.
    uint32_t effective_len() const {
        uint32_t len = payload_len;
        if (tcp && (tcp->syn() || tcp->fin())) len += 1;
        return len;
    }
};

struct Flow {
    FiveTuple tuple;  // oriented so the initiator is the forward side
    std::vector<PacketRecord> packets;
    std::string label;              // empty = unlabeled
    std::string environment_label;  // empty = no shift factor recorded
    uint64_t id = 0;

    Transport proto() const { return tuple.proto; }
    size_t size() const { return packets.size(); }
};

// RFC 793 style comparisons over a half-window of 2^31.
inline bool seq_le(uint32_t a, uint32_t b) {
    return int32_t(a - b) <= 0;
}
inline bool seq_lt(uint32_t a, uint32_t b) {
    return int32_t(a - b) < 0;
}

}  // namespace fgsat
