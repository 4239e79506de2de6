#pragma once

#include <cstdint>
#include <vector>

#include "fgsat/packet.hpp"

namespace fgsat {

struct AssembleResult {
    std::vector<Flow> flows;
    uint64_t dropped_short_flows = 0;  // flows with < 2 packets
};

// Group packets by orientation-insensitive five-tuple, sort each group by
// timestamp (stable), keep the first max_packets, orient the tuple so the
// earliest packet's source is the initiator, and finalize the flow-context
// attributes. Flows with fewer than 2 packets are dropped and counted.
// Output order is first-appearance order of each flow's key in the input.
AssembleResult assemble_flows(std::vector<PacketRecord> packets,
                              size_t max_packets);

// Build a single flow from packets known to share one five-tuple (either
// orientation). Same sort/truncate/orient/finalize steps as assemble_flows.
Flow make_flow(std::vector<PacketRecord> packets, size_t max_packets);

// Recompute the per-flow attribute fields (direction, inter-arrival time,
// relative seq/ack, cumulative directional bytes, packet index) in place.
// Directions must already be assigned relative to the flow tuple.
void finalize_flow_attributes(Flow& flow);

}  // namespace fgsat
