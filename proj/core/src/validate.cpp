#include "colcomp/validate.hpp"

#include <algorithm>
#include <string>

namespace colcomp {

std::vector<std::vector<VertexId>> connected_components(
    const ColouredGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<VertexId>> components;
    std::vector<bool> seen(n, false);
    std::vector<VertexId> queue;
    for (VertexId start = 0; start < n; ++start) {
        if (seen[start]) continue;
        seen[start] = true;
        queue.assign(1, start);
        std::vector<VertexId> component;
        while (!queue.empty()) {
            VertexId v = queue.back();
            queue.pop_back();
            component.push_back(v);
            for (VertexId w : g.neighbours(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

ColourfulCheck is_colourful(const ColouredGraph& g) {
    // first_of[c] is the first vertex of colour c seen in the current
    // component; components and their vertices are scanned in ascending
    // order, so the reported clash is deterministic.
    std::vector<VertexId> first_of(g.colour_count(), 0);
    std::vector<std::uint32_t> stamp(g.colour_count(), 0);
    std::uint32_t round = 0;
    for (const auto& component : connected_components(g)) {
        ++round;
        for (VertexId v : component) {
            ColourId c = g.colour(v);
            if (stamp[c] == round)
                return {false, std::make_pair(first_of[c], v)};
            stamp[c] = round;
            first_of[c] = v;
        }
    }
    return {true, std::nullopt};
}

bool validate_cc(const ColouredGraph& g, const EdgeSet& s, std::size_t budget) {
    for (const Edge& e : s)
        if (!g.has_edge(e.u, e.v))
            throw InvalidSolutionError("solution edge {" + std::to_string(e.u) +
                                       "," + std::to_string(e.v) +
                                       "} not in the graph");
    if (s.size() > budget) return false;
    return is_colourful(g.without_edges(s.edges())).colourful;
}

bool validate_cp(const ColouredGraph& g, const Partition& parts,
                 std::size_t budget) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> covered(n, false);
    for (const auto& part : parts.parts()) {
        for (VertexId v : part) {
            if (v >= n)
                throw InvalidPartitionError("vertex " + std::to_string(v) +
                                            " out of range");
            if (covered[v])
                throw InvalidPartitionError("vertex " + std::to_string(v) +
                                            " in two parts");
            covered[v] = true;
        }
    }
    for (VertexId v = 0; v < n; ++v)
        if (!covered[v])
            throw InvalidPartitionError("vertex " + std::to_string(v) +
                                        " not covered");

    if (parts.size() > budget) return false;

    // part_of doubles as membership marker for the induced-subgraph walks.
    std::vector<std::size_t> part_of(n, 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (VertexId v : parts.parts()[i]) part_of[v] = i;

    std::vector<bool> reached(n, false);
    std::vector<VertexId> queue;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& part = parts.parts()[i];
        // connectivity of the induced subgraph
        queue.assign(1, part.front());
        reached[part.front()] = true;
        std::size_t count = 1;
        while (!queue.empty()) {
            VertexId v = queue.back();
            queue.pop_back();
            for (VertexId w : g.neighbours(v)) {
                if (part_of[w] == i && !reached[w]) {
                    reached[w] = true;
                    ++count;
                    queue.push_back(w);
                }
            }
        }
        if (count != part.size()) return false;
        // distinct colours
        std::vector<ColourId> cs;
        cs.reserve(part.size());
        for (VertexId v : part) cs.push_back(g.colour(v));
        std::sort(cs.begin(), cs.end());
        if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
    }
    return true;
}

Partition edges_to_partition(const ColouredGraph& g, const EdgeSet& s) {
    return Partition(connected_components(g.without_edges(s.edges())));
}

}  // namespace colcomp
