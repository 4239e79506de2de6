#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fgsat/matrix.hpp"
#include "fgsat/packet.hpp"

namespace fgsat {

enum class EdgeKind : uint8_t { window = 0, acknowledgment = 1 };

struct GraphEdge {
    uint32_t a = 0;  // endpoints stored unordered as a < b
    uint32_t b = 0;
    EdgeKind kind = EdgeKind::window;

    bool operator==(const GraphEdge&) const = default;
    bool operator<(const GraphEdge& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return kind < o.kind;
    }
};

struct FlowGraph {
    Matrix x;  // node attributes, one row per packet, |Z| columns
    std::vector<GraphEdge> edges;
    std::string label;
    std::string environment_label;
    uint64_t id = 0;

    size_t node_count() const { return x.rows(); }
    size_t attr_dim() const { return x.cols(); }
};

// Window relationship: chain timestamp-adjacent same-direction packets
// (for TCP, additionally sharing one acknowledgment number).
std::vector<GraphEdge> build_window_edges(const Flow& flow);

// Acknowledgment relationship for TCP: a packet with ACK number A
// acknowledges every earlier unacknowledged opposite-direction packet p
// with seq(p) + effective_len(p) <= A (mod 2^32). Retransmissions
// (duplicate seq ranges) attach to the first matching packet only.
std::vector<GraphEdge> build_ack_edges_tcp(const Flow& flow);

// Acknowledgment relationship for UDP: timestamp-adjacent packets sent in
// opposite directions.
std::vector<GraphEdge> build_ack_edges_udp(const Flow& flow);

// Full graph: nodes carry attributes projected to the ascending-sorted
// selected feature indices; edges are window + ack edges with duplicate
// (pair, kind) entries collapsed. Throws std::invalid_argument on an
// empty selection or out-of-range indices.
FlowGraph build_flow_graph(const Flow& flow,
                           const std::vector<size_t>& selected_features);

// Batch drivers over independent flows. The parallel path uses OpenMP and
// produces bitwise-identical output to the serial path.
std::vector<FlowGraph> build_flow_graphs_serial(
    const std::vector<Flow>& flows, const std::vector<size_t>& selected_features);
std::vector<FlowGraph> build_flow_graphs(
    const std::vector<Flow>& flows, const std::vector<size_t>& selected_features);

// All 39 candidate indices, ascending.
std::vector<size_t> all_feature_indices();

}  // namespace fgsat
