#include "horotree/boundary.hpp"

namespace horo {

Rat arc_measure_v(const Arc& a, int q) {
    int n = int(a.prefix.size());
    if (n < 1) throw error("arc_measure_v: empty prefix");
    return Rat(Int(1), Int(q + 1) * ipow(q, n - 1));
}

Rat arc_measure_e(const Arc& a, int q) {
    int D = int(a.prefix.size());
    if (D < 1) throw error("arc_measure_e: empty prefix");
    int n = (a.prefix[0] == 0) ? D - 1 : D;
    return Rat(Int(1), Int(2) * ipow(q, n));
}

std::vector<Arc> partition(int q, int depth) {
    if (depth < 1) throw error("partition: depth must be >= 1");
    std::vector<Arc> out;
    for (auto& w : circle_vertices(q, depth)) out.push_back(Arc{std::move(w)});
    return out;
}

Rat xi_tube_measure(const Arc& a, int n, int q) { return qpow(q, n) * arc_measure_v(a, q); }

} // namespace horo
