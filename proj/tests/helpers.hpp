#pragma once

#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>

#include "horotree/horospheres.hpp"

namespace th {

using namespace horo;

inline Word W(const std::string& s, int q = 2) { return word_parse(s, q); }

// independent BFS oracle over the neighbor relation
inline std::map<Word, int> bfs_dist_v(const Word& src, int q, int radius) {
    std::map<Word, int> d;
    std::queue<Word> todo;
    d[src] = 0;
    todo.push(src);
    while (!todo.empty()) {
        Word u = todo.front();
        todo.pop();
        if (d[u] == radius) continue;
        for (auto& w : neighbors(u, q))
            if (!d.count(w)) {
                d[w] = d[u] + 1;
                todo.push(w);
            }
    }
    return d;
}

// BFS on the edge graph (adjacent = sharing exactly one vertex)
inline std::map<Edge, int> bfs_dist_e(const Edge& src, int q, int radius) {
    std::map<Edge, int> d;
    std::queue<Edge> todo;
    d[src] = 0;
    todo.push(src);
    while (!todo.empty()) {
        Edge u = todo.front();
        todo.pop();
        if (d[u] == radius) continue;
        for (const Word& w : {u.near(), u.far()})
            for (auto& x : neighbors(w, q)) {
                Edge n = edge_between(w, x);
                if (n == u) continue;
                if (!d.count(n)) {
                    d[n] = d[u] + 1;
                    todo.push(n);
                }
            }
    }
    return d;
}

inline Word random_ray(int q, int len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, q);
    Word ray;
    while (int(ray.size()) < len) {
        int a = pick(rng);
        if (!ray.empty() && ray.back() == a) continue;
        ray.push_back(a);
    }
    return ray;
}

// left translation: (g.f)(v) = f(g^-1 v)
inline FnV translate(const Word& g, const FnV& f) {
    FnV out;
    for (auto& [w, val] : f) out[word_mul(g, w)] = val;
    return out;
}

inline FnV radial_as_fn(const std::vector<Rat>& seq, int q) {
    FnV f;
    for (int n = 0; n < int(seq.size()); ++n)
        if (seq[size_t(n)] != 0)
            for (auto& v : circle_vertices(q, n)) f[v] = seq[size_t(n)];
    return f;
}

inline std::vector<Rat> random_radial(int R, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rat> seq(size_t(R) + 1);
    for (auto& x : seq) x = Rat(num(rng), den(rng));
    return seq;
}

} // namespace th
