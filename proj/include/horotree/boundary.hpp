#pragma once

#include "words.hpp"

namespace horo {

// Boundary points are represented by depth-D cylinder arcs: the arc with
// prefix w collects every ray through w. All measures are exact rationals.
struct Arc {
    Word prefix; // nonempty reduced word
    auto operator<=>(const Arc&) const = default;
};

struct Ray {
    Word word; // depth >= 1
};

// nu_{v0}(arc at depth n) = 1/((q+1) q^(n-1))
Rat arc_measure_v(const Arc& a, int q);

// nu_{e0}(arc) = 1/(2 q^n), n the distance from e0 of the edge subtending
// the arc: for a depth-D prefix this is D-1 on the side of e0's far vertex
// (first letter 0) and D on the other side.
Rat arc_measure_e(const Arc& a, int q);

std::vector<Arc> partition(int q, int depth); // lexicographic, measures sum to 1

// xi(I(v,v0,n)) = q^n nu_{v0}(arc)
Rat xi_tube_measure(const Arc& a, int n, int q);

} // namespace horo
