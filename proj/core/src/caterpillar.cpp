#include "colcomp/caterpillar.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace colcomp::caterpillar {

namespace {

constexpr std::uint32_t kNoPosition = std::numeric_limits<std::uint32_t>::max();

Structure finish_structure(const ColouredGraph& g, BackboneKind kind,
                           std::vector<VertexId> backbone) {
    Structure cs;
    cs.kind = kind;
    cs.backbone = std::move(backbone);
    cs.star_position.assign(g.vertex_count(), kNoPosition);
    cs.on_backbone.assign(g.vertex_count(), false);
    for (std::uint32_t i = 0; i < cs.backbone.size(); ++i) {
        cs.star_position[cs.backbone[i]] = i;
        cs.on_backbone[cs.backbone[i]] = true;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (cs.on_backbone[v]) continue;
        if (g.degree(v) != 1)
            throw NotACaterpillarError("vertex " + std::to_string(v) +
                                       " is neither backbone nor pendant");
        VertexId centre = g.neighbours(v)[0];
        if (!cs.on_backbone[centre])
            throw NotACaterpillarError("pendant vertex " + std::to_string(v) +
                                       " hangs off a non-backbone vertex");
        cs.star_position[v] = cs.star_position[centre];
    }
    return cs;
}

// Star contents of position i under the current graph: the centre plus its
// pendant neighbours. Leaves detached by preprocessing have degree 0 and
// simply stop appearing.
struct StarMember {
    std::uint32_t position;
    VertexId vertex;
    bool centre;
};

// occurrences[c] lists the stars holding colour c, in backbone order.
// Throws PreconditionError if some star repeats a colour.
std::vector<std::vector<StarMember>> colour_occurrences(const ColouredGraph& g,
                                                        const Structure& cs) {
    std::vector<std::vector<StarMember>> occ(g.colour_count());
    std::vector<std::uint32_t> last_star(g.colour_count(), kNoPosition);
    for (std::uint32_t i = 0; i < cs.backbone.size(); ++i) {
        VertexId centre = cs.backbone[i];
        auto add = [&](VertexId v, bool is_centre) {
            ColourId c = g.colour(v);
            if (last_star[c] == i)
                throw PreconditionError("star at backbone position " +
                                        std::to_string(i) +
                                        " is not colourful");
            last_star[c] = i;
            occ[c].push_back({i, v, is_centre});
        };
        add(centre, true);
        for (VertexId w : g.neighbours(centre))
            if (!cs.on_backbone[w]) add(w, false);
    }
    return occ;
}

std::size_t repeated_colour_count(
    const std::vector<std::vector<StarMember>>& occ) {
    std::size_t repeated = 0;
    for (const auto& list : occ)
        if (list.size() >= 2) ++repeated;
    return repeated;
}

}  // namespace

Structure recognize(const ColouredGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw NotACaterpillarError("empty graph");
    if (connected_components(g).size() != 1)
        throw DisconnectedGraphError("input graph is disconnected");
    if (n == 1) return finish_structure(g, BackboneKind::Path, {0});
    if (n == 2) return finish_structure(g, BackboneKind::Path, {0, 1});

    // Core = vertices of degree >= 2; the backbone must live there.
    std::vector<VertexId> core;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) >= 2) core.push_back(v);
    if (core.empty())
        throw NotACaterpillarError("no degree-2 vertex in a graph of size 3+");

    std::vector<std::uint32_t> core_degree(n, 0);
    std::vector<bool> in_core(n, false);
    for (VertexId v : core) in_core[v] = true;
    for (VertexId v : core)
        for (VertexId w : g.neighbours(v))
            if (in_core[w]) ++core_degree[v];

    auto core_walk = [&](VertexId start, VertexId second) {
        std::vector<VertexId> walk{start, second};
        VertexId prev = start, cur = second;
        while (true) {
            VertexId next = kNoPosition;
            for (VertexId w : g.neighbours(cur)) {
                if (in_core[w] && w != prev) {
                    next = w;
                    break;
                }
            }
            if (next == kNoPosition || next == start) break;
            walk.push_back(next);
            prev = cur;
            cur = next;
        }
        return walk;
    };

    bool all_core_degree_two =
        std::all_of(core.begin(), core.end(),
                    [&](VertexId v) { return core_degree[v] == 2; });

    if (all_core_degree_two && core.size() >= 3) {
        // Candidate cycle backbone: walk from the smallest core vertex
        // towards its smaller core neighbour and require closure.
        VertexId start = core.front();
        VertexId second = kNoPosition;
        for (VertexId w : g.neighbours(start))
            if (in_core[w]) {
                second = std::min(second, w);
            }
        std::vector<VertexId> walk = core_walk(start, second);
        if (walk.size() != core.size())
            throw NotACaterpillarError("degree-2 core is not a single cycle");
        bool closes = g.has_edge(walk.back(), start);
        if (!closes)
            throw NotACaterpillarError("degree-2 core does not close a cycle");
        return finish_structure(g, BackboneKind::Cycle, std::move(walk));
    }

    // Path backbone: the core must itself be a path.
    for (VertexId v : core)
        if (core_degree[v] > 2)
            throw NotACaterpillarError("vertex " + std::to_string(v) +
                                       " branches inside the core");

    std::vector<VertexId> spine;
    if (core.size() == 1) {
        spine = {core.front()};
    } else {
        std::vector<VertexId> ends;
        for (VertexId v : core)
            if (core_degree[v] <= 1) ends.push_back(v);
        if (ends.size() != 2)
            throw NotACaterpillarError("core is not a single path");
        VertexId start = std::min(ends[0], ends[1]);
        VertexId second = kNoPosition;
        for (VertexId w : g.neighbours(start))
            if (in_core[w]) {
                second = w;
                break;
            }
        if (second == kNoPosition)
            throw NotACaterpillarError("core is not a single path");
        spine = core_walk(start, second);
        if (spine.size() != core.size())
            throw NotACaterpillarError("core is not a single path");
    }

    // A spine end adopts its pendant neighbour when that neighbour is the
    // only one; several pendants stay leaves of the end star.
    auto pendants_of = [&](VertexId v) {
        std::vector<VertexId> out;
        for (VertexId w : g.neighbours(v))
            if (!in_core[w]) out.push_back(w);
        return out;
    };
    if (spine.size() == 1) {
        auto pend = pendants_of(spine.front());
        if (pend.size() == 2) {
            VertexId lo = std::min(pend[0], pend[1]);
            VertexId hi = std::max(pend[0], pend[1]);
            spine = {lo, spine.front(), hi};
        }
    } else {
        auto front_pend = pendants_of(spine.front());
        auto back_pend = pendants_of(spine.back());
        if (front_pend.size() == 1)
            spine.insert(spine.begin(), front_pend.front());
        if (back_pend.size() == 1) spine.push_back(back_pend.front());
    }

    std::vector<VertexId> reversed(spine.rbegin(), spine.rend());
    if (reversed < spine) spine = std::move(reversed);
    return finish_structure(g, BackboneKind::Path, std::move(spine));
}

PreprocessResult preprocess(const ColouredGraph& g, const Structure& cs) {
    EdgeSet removed;
    std::vector<VertexId> leaves;
    for (VertexId centre : cs.backbone) {
        leaves.clear();
        for (VertexId w : g.neighbours(centre))
            if (!cs.on_backbone[w]) leaves.push_back(w);
        std::sort(leaves.begin(), leaves.end());
        ColourId centre_colour = g.colour(centre);
        std::vector<bool> keep_seen(g.colour_count(), false);
        for (VertexId leaf : leaves) {
            ColourId c = g.colour(leaf);
            if (c == centre_colour || keep_seen[c])
                removed.insert(make_edge(centre, leaf));
            else
                keep_seen[c] = true;
        }
    }
    ColouredGraph pruned = g.without_edges(removed.edges());
    return {std::move(removed), std::move(pruned)};
}

EdgeSet solve_single_colour(const ColouredGraph& g, const Structure& cs) {
    auto occ = colour_occurrences(g, cs);
    if (repeated_colour_count(occ) != 1)
        throw PreconditionError(
            "expected exactly one repeated colour in the backbone component");
    const std::vector<StarMember>* hits = nullptr;
    for (const auto& list : occ)
        if (list.size() >= 2) hits = &list;

    const std::size_t total = hits->size();
    std::size_t backbone_hits = 0;
    for (const auto& m : *hits)
        if (m.centre) ++backbone_hits;

    EdgeSet cuts;
    if (cs.kind == BackboneKind::Path) {
        for (std::size_t i = 0; i + 1 < total; ++i)
            cuts.insert(cs.backbone_edge((*hits)[i].position));
        return cuts;
    }
    if (backbone_hits >= 2) {
        // Two backbone occurrences force cycle cuts; one per gap between
        // cyclically consecutive occurrence stars.
        for (const auto& m : *hits) cuts.insert(cs.backbone_edge(m.position));
        return cuts;
    }
    // At most one occurrence sits on the backbone: detach all leaf
    // occurrences but one.
    const StarMember* keep = nullptr;
    for (const auto& m : *hits) {
        if (m.centre) keep = &m;
    }
    if (keep == nullptr) {
        keep = &(*hits)[0];
        for (const auto& m : *hits)
            if (m.vertex < keep->vertex) keep = &m;
    }
    for (const auto& m : *hits) {
        if (&m == keep) continue;
        cuts.insert(make_edge(m.vertex, cs.backbone[m.position]));
    }
    return cuts;
}

ArcMultiset scan_arcs(const ColouredGraph& g, const Structure& cs) {
    auto occ = colour_occurrences(g, cs);
    ArcMultiset arcs;
    for (const auto& list : occ) {
        if (list.size() < 2) continue;
        for (std::size_t i = 0; i + 1 < list.size(); ++i)
            arcs.pairs.push_back({list[i].position, list[i + 1].position});
        if (cs.kind == BackboneKind::Cycle)
            arcs.pairs.push_back({list.back().position, list.front().position});
    }
    std::sort(arcs.pairs.begin(), arcs.pairs.end());
    return arcs;
}

arccover::ArcSystem to_arc_system(const ArcMultiset& arcs,
                                  const Structure& cs) {
    arccover::ArcSystem sys;
    sys.positions = static_cast<std::uint32_t>(cs.backbone_edge_count());
    sys.circular = cs.kind == BackboneKind::Cycle;
    const std::uint32_t length = static_cast<std::uint32_t>(cs.backbone_length());
    sys.arcs.reserve(arcs.pairs.size());
    for (const PositionPair& p : arcs.pairs) {
        std::uint32_t len = sys.circular ? (p.to + length - p.from) % length
                                         : p.to - p.from;
        sys.arcs.push_back({p.from, len});
    }
    return sys;
}

EdgeSet solve_cc_on(const ColouredGraph& g, const Structure& cs) {
    auto [removed, pruned] = preprocess(g, cs);
    auto occ = colour_occurrences(pruned, cs);
    std::size_t repeated = repeated_colour_count(occ);
    if (repeated == 0) return removed;
    if (repeated == 1) {
        removed.merge(solve_single_colour(pruned, cs));
        return removed;
    }
    ArcMultiset arcs = scan_arcs(pruned, cs);
    arccover::ArcSystem sys = to_arc_system(arcs, cs);
    arccover::PiercingSet points = sys.circular ? arccover::pierce_circular(sys)
                                                : arccover::pierce_linear(sys);
    for (std::uint32_t t : points.points) removed.insert(cs.backbone_edge(t));
    return removed;
}

EdgeSet solve_cc(const ColouredGraph& g) { return solve_cc_on(g, recognize(g)); }

Partition solve_cp(const ColouredGraph& g) {
    return edges_to_partition(g, solve_cc(g));
}

}  // namespace colcomp::caterpillar
