#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "colcomp/graph.hpp"

namespace colcomp {

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const ColouredGraph& g);

struct ColourfulCheck {
    bool colourful = true;
    // Two same-coloured vertices sharing a component, present iff not
    // colourful.
    std::optional<std::pair<VertexId, VertexId>> clash;
};

ColourfulCheck is_colourful(const ColouredGraph& g);

// True iff |s| <= budget and g - s is colourful. Edges outside g raise
// InvalidSolutionError.
bool validate_cc(const ColouredGraph& g, const EdgeSet& s, std::size_t budget);

// True iff |parts| <= budget and every part induces a connected colourful
// subgraph. A non-partition (overlap or missing vertex) raises
// InvalidPartitionError.
bool validate_cp(const ColouredGraph& g, const Partition& parts,
                 std::size_t budget);

// The partition whose parts are the connected components of g - s.
Partition edges_to_partition(const ColouredGraph& g, const EdgeSet& s);

}  // namespace colcomp
