#pragma once

#include <cstdint>
#include <vector>

#include "colcomp/error.hpp"

namespace colcomp::arccover {

// A contiguous run of positions, starting at `start` and covering `length`
// consecutive positions (wrapping modulo the system size when circular).
struct Arc {
    std::uint32_t start = 0;
    std::uint32_t length = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A multiset of arcs over positions 0..positions-1 on a line or circle.
struct ArcSystem {
    std::uint32_t positions = 0;
    bool circular = false;
    std::vector<Arc> arcs;
};

// Positions hitting every arc of the system; kept sorted.
struct PiercingSet {
    std::vector<std::uint32_t> points;

    std::size_t size() const { return points.size(); }
    friend bool operator==(const PiercingSet&, const PiercingSet&) = default;
};

bool arc_contains(const ArcSystem& sys, const Arc& arc, std::uint32_t point);

// Minimum piercing of a linear system via the earliest-right-endpoint greedy.
PiercingSet pierce_linear(const ArcSystem& sys);

// Minimum piercing of a circular system. Picks a containment-minimal arc z
// (shortest, then lowest start); every piercing set must hit z, so each
// position of z is tried as a pierce point with the remaining arcs linearised
// there, and the best candidate wins (smallest size, then smallest point).
// Worst case O(len(z) * a log a) for a arcs.
PiercingSet pierce_circular(const ArcSystem& sys);

}  // namespace colcomp::arccover
