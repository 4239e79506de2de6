#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgsat/packet.hpp"

namespace fgsat {

// Fatal problems with the capture itself (bad magic, pcapng, truncated
// global header). Per-frame damage is never fatal; it is counted instead.
class PcapError : public std::runtime_error {
public:
    explicit PcapError(const std::string& what) : std::runtime_error(what) {}
};

struct IngestConfig {
    bool unwrap_vlan = true;  // strip 802.1Q / 802.1ad tags
};

struct IngestCounters {
    uint64_t frames = 0;             // frames seen in the capture
    uint64_t packets = 0;            // records emitted (IPv4 TCP/UDP)
    uint64_t skipped_non_ip = 0;     // non-IPv4 or non-TCP/UDP frames
    uint64_t skipped_fragments = 0;  // IP fragment continuations
    uint64_t malformed_frames = 0;   // truncated / undersized frames
};

struct ParseResult {
    std::vector<PacketRecord> packets;
    IngestCounters counters;
};

// Parse a classic pcap byte stream (magic 0xA1B2C3D4 / 0xD4C3B2A1, micro-
// or nanosecond variants, either byte order; link type Ethernet).
// Emits one PacketRecord per IPv4 packet carrying TCP or UDP. Attribute
// fields that need flow context (direction, inter-arrival, relative
// seq/ack, cumulative bytes, index) are finalized later by flow assembly.
ParseResult parse_capture(std::span<const uint8_t> capture_bytes,
                          const IngestConfig& config = {});

ParseResult parse_capture_file(const std::string& path,
                               const IngestConfig& config = {});

}  // namespace fgsat
