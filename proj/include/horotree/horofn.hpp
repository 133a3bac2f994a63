#pragma once

#include <cstdint>

#include "boundary.hpp"

namespace horo {

enum class Simplex { vertex, edge };

std::int64_t arc_count(int q, int depth);
std::int64_t arc_rank(const Word& w, int q); // lex rank among reduced words of |w|
Word arc_word(std::int64_t rank, int q, int depth);

// Function on the truncated horospherical bundle: one value per
// (depth-D arc, horospherical index n), n in [nmin, nmax], chart Sigma_{v0}
// (or Sigma_{e0} for kind == edge). Depth is fixed per object; operations
// on mismatched depths throw.
struct HoroFn {
    Simplex kind = Simplex::vertex;
    int q = 2;
    int depth = 1;
    int nmin = 0;
    int nmax = 0;
    std::vector<Rat> val; // arc-major, (nmax-nmin+1) entries per arc

    HoroFn() = default;
    HoroFn(Simplex k, int q_, int depth_, int nmin_, int nmax_);

    int width() const { return nmax - nmin + 1; }
    Rat& at(std::int64_t arc, int n) { return val[size_t(arc) * width() + size_t(n - nmin)]; }
    const Rat& at(std::int64_t arc, int n) const {
        return val[size_t(arc) * width() + size_t(n - nmin)];
    }
    // zero outside the stored index range
    Rat get(std::int64_t arc, int n) const {
        if (n < nmin || n > nmax) return Rat(0);
        return at(arc, n);
    }
};

// Flag-horospherical function: value per (arc, nE, nV); the support lies on
// the two diagonals nV in {nE, nE+1} but the grid is stored densely.
struct HoroFnF {
    int q = 2;
    int depth = 1;
    int eNmin = 0, eNmax = 0, vNmin = 0, vNmax = 0;
    std::vector<Rat> val;

    HoroFnF() = default;
    HoroFnF(int q_, int depth_, int eNmin_, int eNmax_, int vNmin_, int vNmax_);

    int ewidth() const { return eNmax - eNmin + 1; }
    int vwidth() const { return vNmax - vNmin + 1; }
    Rat& at(std::int64_t arc, int ne, int nv) {
        return val[(size_t(arc) * ewidth() + size_t(ne - eNmin)) * vwidth() + size_t(nv - vNmin)];
    }
    const Rat& at(std::int64_t arc, int ne, int nv) const {
        return val[(size_t(arc) * ewidth() + size_t(ne - eNmin)) * vwidth() + size_t(nv - vNmin)];
    }
    Rat get(std::int64_t arc, int ne, int nv) const {
        if (ne < eNmin || ne > eNmax || nv < vNmin || nv > vNmax) return Rat(0);
        return at(arc, ne, nv);
    }
};

} // namespace horo
