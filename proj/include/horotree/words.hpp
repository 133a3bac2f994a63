#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rational.hpp"

namespace horo {

// The homogeneous tree T_q is the Cayley graph of the free product of q+1
// copies of Z_2; vertices are reduced words over the letters {0,...,q}
// (no two consecutive letters equal), the empty word being the reference
// vertex v0.
using Word = std::vector<int>;

struct TreeParams {
    int q;
    int radius;
    TreeParams(int q_, int radius_) : q(q_), radius(radius_) {
        if (q < 2) throw error("TreeParams: q must be >= 2");
        if (radius < 0) throw error("TreeParams: radius must be >= 0");
    }
};

bool is_reduced(const Word& w);
Word word_mul(const Word& a, const Word& b); // concatenate and cancel (letters are involutions)
Word word_inv(const Word& a);                // reverse
int common_prefix(const Word& a, const Word& b);

int dist_v(const Word& u, const Word& v);
Word join3(const Word& u, const Word& v, const Word& w);
std::vector<Word> geodesic(const Word& u, const Word& v); // inclusive path

// Canonical edge: base is the endpoint nearer v0, base.letter the far one.
struct Edge {
    Word base;
    int letter = 0;
    Edge() = default;
    Edge(Word b, int l);
    Word near() const { return base; }
    Word far() const;
    auto operator<=>(const Edge&) const = default;
};

inline Edge reference_edge() { return Edge(Word{}, 0); }

Edge edge_between(const Word& u, const Word& v); // u, v adjacent
int dist_e(const Edge& a, const Edge& b);
int edge_norm(const Edge& e); // dist_e(e, e0)

// vertex-edge distance lies in N + 1/2; returned doubled
int dist_ve_twice(const Word& v, const Edge& e);

struct Flag {
    Edge edge;
    bool far = false; // selects the flag vertex among the two endpoints
    Flag() = default;
    Flag(Edge e, bool f) : edge(std::move(e)), far(f) {}
    Word vertex() const { return far ? edge.far() : edge.near(); }
    Flag flip() const { return Flag(edge, !far); }
    auto operator<=>(const Flag&) const = default;
};

inline Flag reference_flag() { return Flag(reference_edge(), false); }

// dist(f1,f2) = (1-2xi) dist(v1,v2) + 2xi dist(e1,e2), 0 < xi < 1/4
Rat dist_f(const Flag& a, const Flag& b, const Rat& xi);
inline Rat default_xi_flag() { return Rat(1, 8); }

std::vector<Word> neighbors(const Word& v, int q);
std::vector<Word> circle_vertices(int q, int n); // lexicographic
std::vector<Word> ball_vertices(int q, int R);   // by (length, lex)
std::vector<Edge> circle_edges(int q, int n);
std::vector<Edge> ball_edges(int q, int R);
std::vector<Flag> ball_flags(int q, int R); // both flags of every edge in ball_edges

// truncation-checked forms: n beyond params.radius is an error
std::vector<Word> circle_vertices(const TreeParams& params, int n);
std::vector<Edge> circle_edges(const TreeParams& params, int n);
std::vector<Word> ball_vertices(const TreeParams& params);

// serialization: digits, '.'-separated when q >= 10; edge "base+letter"; flag "edge@0|1"
std::string word_str(const Word& w, int q);
Word word_parse(const std::string& s, int q);
std::string edge_str(const Edge& e, int q);
Edge edge_parse(const std::string& s, int q);
std::string flag_str(const Flag& f, int q);
Flag flag_parse(const std::string& s, int q);

} // namespace horo
