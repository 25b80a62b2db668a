#include "colcomp/arccover.hpp"

#include <algorithm>
#include <limits>

namespace colcomp::arccover {

namespace {

void check_arcs(const ArcSystem& sys) {
    for (const Arc& a : sys.arcs) {
        if (a.length == 0) throw PreconditionError("empty arc");
        if (a.length > sys.positions)
            throw PreconditionError("arc longer than the system");
        if (!sys.circular && a.start + a.length > sys.positions)
            throw PreconditionError("linear arc out of range");
        if (sys.circular && a.start >= sys.positions)
            throw PreconditionError("arc start not reduced modulo the system");
    }
}

// Greedy stabbing of [start, end] intervals sorted by right endpoint.
std::vector<std::uint32_t> stab_intervals(
    std::vector<std::pair<std::uint32_t, std::uint32_t>> intervals) {
    std::sort(intervals.begin(), intervals.end(),
              [](const auto& a, const auto& b) {
                  return a.second != b.second ? a.second < b.second
                                              : a.first < b.first;
              });
    std::vector<std::uint32_t> points;
    bool have_last = false;
    std::uint32_t last = 0;
    for (const auto& [start, end] : intervals) {
        if (have_last && start <= last) continue;
        points.push_back(end);
        last = end;
        have_last = true;
    }
    return points;
}

}  // namespace

bool arc_contains(const ArcSystem& sys, const Arc& arc, std::uint32_t point) {
    if (!sys.circular) return arc.start <= point && point < arc.start + arc.length;
    std::uint32_t offset = (point + sys.positions - arc.start) % sys.positions;
    return offset < arc.length;
}

PiercingSet pierce_linear(const ArcSystem& sys) {
    if (sys.circular) throw PreconditionError("pierce_linear on a circular system");
    check_arcs(sys);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> intervals;
    intervals.reserve(sys.arcs.size());
    for (const Arc& a : sys.arcs)
        intervals.emplace_back(a.start, a.start + a.length - 1);
    return {stab_intervals(std::move(intervals))};
}

PiercingSet pierce_circular(const ArcSystem& sys) {
    if (!sys.circular) throw PreconditionError("pierce_circular on a linear system");
    check_arcs(sys);
    if (sys.arcs.empty()) return {};

    const std::uint32_t m = sys.positions;
    Arc z = *std::min_element(
        sys.arcs.begin(), sys.arcs.end(), [](const Arc& a, const Arc& b) {
            return a.length != b.length ? a.length < b.length
                                        : a.start < b.start;
        });

    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    std::uint32_t best_point = 0;
    std::vector<std::uint32_t> best_rest;

    for (std::uint32_t k = 0; k < z.length; ++k) {
        std::uint32_t e = (z.start + k) % m;
        // Arcs not containing e become plain intervals once positions are
        // renumbered to start just after e.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> intervals;
        for (const Arc& a : sys.arcs) {
            if (arc_contains(sys, a, e)) continue;
            std::uint32_t start = (a.start + m - (e + 1) % m) % m;
            intervals.emplace_back(start, start + a.length - 1);
        }
        auto rest = stab_intervals(std::move(intervals));
        std::size_t total = rest.size() + 1;
        if (total < best_size || (total == best_size && e < best_point)) {
            best_size = total;
            best_point = e;
            best_rest = std::move(rest);
        }
    }

    std::vector<std::uint32_t> points;
    points.reserve(best_size);
    points.push_back(best_point);
    for (std::uint32_t p : best_rest)
        points.push_back((p + best_point + 1) % m);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return {std::move(points)};
}

}  // namespace colcomp::arccover
