#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "colcomp/error.hpp"

namespace colcomp {

using VertexId = std::uint32_t;
using ColourId = std::uint32_t;

// Undirected edge, stored with the smaller endpoint first.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

// A vertex-coloured undirected graph. Vertices are dense 0-based ids, colours
// are dense unsigned ids. Self-loops and multi-edges are rejected at
// construction; the adjacency lists are derived from the edge list and kept
// sorted.
class ColouredGraph {
public:
    ColouredGraph() = default;
    ColouredGraph(std::vector<ColourId> colours, std::vector<Edge> edges);

    std::size_t vertex_count() const { return colours_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Number of colour ids in play: one past the largest id in use.
    std::size_t colour_count() const { return colour_count_; }

    ColourId colour(VertexId v) const { return colours_[v]; }
    const std::vector<ColourId>& colours() const { return colours_; }

    // Sorted canonical edge list.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(VertexId a, VertexId b) const;

    std::span<const VertexId> neighbours(VertexId v) const {
        return {adjacency_.data() + adj_offset_[v],
                adj_offset_[v + 1] - adj_offset_[v]};
    }

    std::size_t degree(VertexId v) const {
        return adj_offset_[v + 1] - adj_offset_[v];
    }

    // The graph with the given edges removed; edges not present are rejected.
    ColouredGraph without_edges(const std::vector<Edge>& removed) const;

    friend bool operator==(const ColouredGraph& a, const ColouredGraph& b) {
        return a.colours_ == b.colours_ && a.edges_ == b.edges_;
    }

private:
    std::vector<ColourId> colours_;
    std::vector<Edge> edges_;
    std::vector<VertexId> adjacency_;
    std::vector<std::size_t> adj_offset_;
    std::size_t colour_count_ = 0;
};

// A set of edges of some host graph, e.g. a Colourful Components solution.
// Stored sorted and duplicate-free; membership in the host is checked by the
// validators, not here.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<Edge> edges);

    bool contains(Edge e) const;
    void insert(Edge e);
    void merge(const EdgeSet& other);

    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }

    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<Edge> edges_;
};

// A partition of a vertex set into nonempty parts, e.g. a Colourful Partition
// solution. Parts are sorted internally and ordered by smallest member;
// disjointness and coverage are checked against a graph by validate_cp.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::vector<VertexId>> parts);

    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    const std::vector<std::vector<VertexId>>& parts() const { return parts_; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::vector<VertexId>> parts_;
};

}  // namespace colcomp
