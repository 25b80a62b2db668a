#pragma once

#include <cstdint>
#include <vector>

#include "colcomp/graph.hpp"

namespace colcomp {

// Bridges of g and the vertex partition left after removing them (the
// 2-edge-connected components). Two vertices have a minimum edge cut of one
// between them iff they land in different components.
struct BridgeDecomposition {
    std::vector<Edge> bridges;                // sorted
    std::vector<std::uint32_t> component_of;  // per vertex
    std::size_t component_count = 0;

    bool is_bridge(Edge e) const;
};

BridgeDecomposition two_edge_components(const ColouredGraph& g);

}  // namespace colcomp
