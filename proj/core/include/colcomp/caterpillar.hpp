#pragma once

#include <cstdint>
#include <vector>

#include "colcomp/arccover.hpp"
#include "colcomp/graph.hpp"
#include "colcomp/validate.hpp"

namespace colcomp {

enum class BackboneKind { Path, Cycle };

// Optional backbone declaration carried by graph files (bpath / bcycle).
struct BackboneHint {
    BackboneKind kind = BackboneKind::Path;
    std::vector<VertexId> order;
};

}  // namespace colcomp

namespace colcomp::caterpillar {

// A recognised (cyclic) 1-caterpillar: an ordered backbone plus, for every
// other vertex, the star it hangs from.
struct Structure {
    BackboneKind kind = BackboneKind::Path;
    std::vector<VertexId> backbone;
    // Star position of every vertex: backbone vertices map to their own
    // index, leaves to the index of their unique backbone neighbour.
    std::vector<std::uint32_t> star_position;
    std::vector<bool> on_backbone;

    std::size_t backbone_length() const { return backbone.size(); }

    std::size_t backbone_edge_count() const {
        if (backbone.size() < 2) return 0;
        return kind == BackboneKind::Cycle ? backbone.size()
                                           : backbone.size() - 1;
    }

    // Edge t joins backbone positions t and t+1 (mod length on cycles).
    Edge backbone_edge(std::uint32_t t) const {
        return make_edge(backbone[t], backbone[(t + 1) % backbone.size()]);
    }

    VertexId star_centre_of(VertexId v) const {
        return backbone[star_position[v]];
    }
};

// Ordered pairs of backbone positions; the pair (i, j) stands for the run of
// backbone edges i, i+1, ..., j-1 traversed in scan direction (mod length on
// cycles). Kept sorted as a multiset.
struct PositionPair {
    std::uint32_t from = 0;
    std::uint32_t to = 0;

    friend auto operator<=>(const PositionPair&, const PositionPair&) = default;
};

struct ArcMultiset {
    std::vector<PositionPair> pairs;

    std::size_t size() const { return pairs.size(); }
    friend bool operator==(const ArcMultiset&, const ArcMultiset&) = default;
};

// Recognises g as a (cyclic) 1-caterpillar in canonical form. The backbone is
// the path/cycle left after detaching degree-1 vertices; a path end adopts
// its pendant neighbour as a spine end when that neighbour is unique, and the
// orientation with the lexicographically smaller vertex sequence wins. Cyclic
// backbones start at their smallest vertex, towards its smaller neighbour.
// Throws DisconnectedGraphError or NotACaterpillarError.
Structure recognize(const ColouredGraph& g);

struct PreprocessResult {
    EdgeSet removed;      // S_p: leaf edges forced into every solution
    ColouredGraph graph;  // g - S_p, with colourful stars
};

// Detaches leaves that clash inside their star: leaves repeating the centre
// colour all go; of several same-coloured leaves, all but the smallest id go.
PreprocessResult preprocess(const ColouredGraph& g, const Structure& cs);

// Optimal solution when exactly one colour repeats in the backbone component
// of g (which must have colourful stars): n-1 cuts on a path backbone or a
// cycle with at most one backbone occurrence, n cuts otherwise.
EdgeSet solve_single_colour(const ColouredGraph& g, const Structure& cs);

// The consecutive-occurrence pairs of every repeated colour: for a colour
// seen at backbone positions p_1 < ... < p_k this contributes
// (p_1,p_2), ..., (p_{k-1},p_k), plus the wrap pair (p_k,p_1) on cycles.
// These are exactly the colour-critical bad paths. Requires colourful stars.
ArcMultiset scan_arcs(const ColouredGraph& g, const Structure& cs);

// The arcs as a piercing instance over backbone edge indices.
arccover::ArcSystem to_arc_system(const ArcMultiset& arcs, const Structure& cs);

// Full pipeline on an already recognised structure.
EdgeSet solve_cc_on(const ColouredGraph& g, const Structure& cs);

// Minimum edge set whose removal makes the caterpillar colourful.
EdgeSet solve_cc(const ColouredGraph& g);

// Minimum colourful partition: the components left by solve_cc.
Partition solve_cp(const ColouredGraph& g);

}  // namespace colcomp::caterpillar
