#include "colcomp/graph.hpp"

#include <algorithm>
#include <string>

namespace colcomp {

ColouredGraph::ColouredGraph(std::vector<ColourId> colours,
                             std::vector<Edge> edges)
    : colours_(std::move(colours)), edges_(std::move(edges)) {
    const std::size_t n = colours_.size();
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v)
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        if (e.v >= n)
            throw GraphError("edge endpoint " + std::to_string(e.v) +
                             " out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw GraphError("duplicate edge");

    for (ColourId c : colours_)
        colour_count_ = std::max<std::size_t>(colour_count_, c + 1);

    adj_offset_.assign(n + 1, 0);
    for (const Edge& e : edges_) {
        ++adj_offset_[e.u + 1];
        ++adj_offset_[e.v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) adj_offset_[i] += adj_offset_[i - 1];
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[cursor[e.u]++] = e.v;
        adjacency_[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n; ++v)
        std::sort(adjacency_.begin() + adj_offset_[v],
                  adjacency_.begin() + adj_offset_[v + 1]);
}

bool ColouredGraph::has_edge(VertexId a, VertexId b) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

ColouredGraph ColouredGraph::without_edges(
    const std::vector<Edge>& removed) const {
    std::vector<Edge> sorted(removed);
    for (Edge& e : sorted)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(sorted.begin(), sorted.end());
    for (const Edge& e : sorted)
        if (!has_edge(e.u, e.v))
            throw InvalidSolutionError("edge {" + std::to_string(e.u) + "," +
                                       std::to_string(e.v) +
                                       "} not in the graph");
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    std::set_difference(edges_.begin(), edges_.end(), sorted.begin(),
                        sorted.end(), std::back_inserter(kept));
    return ColouredGraph(colours_, std::move(kept));
}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (Edge& e : edges_)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(),
                              make_edge(e.u, e.v));
}

void EdgeSet::insert(Edge e) {
    e = make_edge(e.u, e.v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

void EdgeSet::merge(const EdgeSet& other) {
    std::vector<Edge> merged;
    merged.reserve(edges_.size() + other.edges_.size());
    std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(),
                   other.edges_.end(), std::back_inserter(merged));
    edges_ = std::move(merged);
}

Partition::Partition(std::vector<std::vector<VertexId>> parts)
    : parts_(std::move(parts)) {
    for (auto& part : parts_) {
        if (part.empty()) throw InvalidPartitionError("empty part");
        std::sort(part.begin(), part.end());
        if (std::adjacent_find(part.begin(), part.end()) != part.end())
            throw InvalidPartitionError("repeated vertex within a part");
    }
    std::sort(parts_.begin(), parts_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace colcomp
