#include "horotree/horospheres.hpp"

#include <omp.h>

#include <algorithm>
#include <random>

namespace horo {

std::int64_t arc_count(int q, int depth) {
    if (depth < 1) throw error("arc_count: depth must be >= 1");
    std::int64_t c = q + 1;
    for (int i = 1; i < depth; ++i) c *= q;
    return c;
}

std::int64_t arc_rank(const Word& w, int q) {
    if (w.empty()) throw error("arc_rank: empty word");
    std::int64_t r = w[0];
    for (size_t i = 1; i < w.size(); ++i) {
        int digit = w[i] - (w[i] > w[i - 1] ? 1 : 0); // rank among letters != previous
        r = r * q + digit;
    }
    return r;
}

Word arc_word(std::int64_t rank, int q, int depth) {
    std::vector<int> digits(static_cast<size_t>(depth), 0);
    for (int i = depth - 1; i >= 1; --i) {
        digits[size_t(i)] = int(rank % q);
        rank /= q;
    }
    digits[0] = int(rank);
    Word w(static_cast<size_t>(depth), 0);
    w[0] = digits[0];
    for (int i = 1; i < depth; ++i)
        w[size_t(i)] = digits[size_t(i)] + (digits[size_t(i)] >= w[size_t(i - 1)] ? 1 : 0);
    return w;
}

HoroFn::HoroFn(Simplex k, int q_, int depth_, int nmin_, int nmax_)
    : kind(k), q(q_), depth(depth_), nmin(nmin_), nmax(nmax_) {
    if (nmax < nmin) throw error("HoroFn: empty index range");
    val.assign(size_t(arc_count(q, depth)) * size_t(width()), Rat(0));
}

HoroFnF::HoroFnF(int q_, int depth_, int eNmin_, int eNmax_, int vNmin_, int vNmax_)
    : q(q_), depth(depth_), eNmin(eNmin_), eNmax(eNmax_), vNmin(vNmin_), vNmax(vNmax_) {
    if (eNmax < eNmin || vNmax < vNmin) throw error("HoroFnF: empty index range");
    val.assign(size_t(arc_count(q, depth)) * size_t(ewidth()) * size_t(vwidth()), Rat(0));
}

int h_index_v(const Word& v, const Word& ray) {
    if (ray.size() < v.size()) throw error("h_index_v: ray depth < |v|");
    return 2 * common_prefix(v, ray) - int(v.size());
}

int h_index_v_based(const Word& v, const Word& base, const Word& ray) {
    Word binv = word_inv(base);
    Word u = word_mul(binv, v);
    Word s = word_mul(binv, ray);
    if (s.size() < u.size()) throw error("h_index_v_based: insufficient ray depth");
    return 2 * common_prefix(u, s) - int(u.size());
}

Word omega_endpoint(const Edge& e, const Word& ray) {
    Word nearw = e.near(), farw = e.far();
    return h_index_v(farw, ray) > h_index_v(nearw, ray) ? farw : nearw;
}

int h_index_e(const Edge& e, const Word& ray) {
    if (ray.empty()) throw error("h_index_e: empty ray");
    int ref = (ray[0] == 0) ? 1 : 0; // index of the omega-side endpoint of e0
    return h_index_v(omega_endpoint(e, ray), ray) - ref;
}

int h_index_mixed_twice(const Word& v, const Edge& e, const Word& ray) {
    return 1 + 2 * (h_index_v(v, ray) - h_index_v(omega_endpoint(e, ray), ray));
}

std::pair<int, int> h_index_flag(const Flag& f, const Word& ray) {
    int hn = h_index_v(f.edge.near(), ray);
    int hf = h_index_v(f.edge.far(), ray);
    int ne = std::min(hn, hf); // endpoint away from omega
    int nv = f.far ? hf : hn;
    return {ne, nv};
}

bool cocycle_check(int q, int R, int nrays, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, q);
    auto ball = ball_vertices(q, R);
    int depth = 3 * R + 2;
    for (int r = 0; r < nrays; ++r) {
        Word ray;
        while (int(ray.size()) < depth) {
            int a = pick(rng);
            if (!ray.empty() && ray.back() == a) continue;
            ray.push_back(a);
        }
        for (const Word& a : ball)
            for (const Word& b : ball)
                for (const Word& c : ball) {
                    int ab = h_index_v_based(a, b, ray);
                    int bc = h_index_v_based(b, c, ray);
                    int ac = h_index_v_based(a, c, ray);
                    if (ab + bc != ac) return false;
                }
    }
    return true;
}

namespace {

std::vector<Word> arc_words(int q, int depth) { return circle_vertices(q, depth); }

int max_word_len_v(const FnV& f) {
    size_t m = 0;
    for (auto& [w, val] : f) m = std::max(m, w.size());
    return int(m);
}

int max_word_len_e(const FnE& f) {
    size_t m = 0;
    for (auto& [e, val] : f) m = std::max(m, e.base.size() + 1);
    return int(m);
}

int max_word_len_f(const FnF& f) {
    size_t m = 0;
    for (auto& [fl, val] : f) m = std::max(m, fl.edge.base.size() + 1);
    return int(m);
}

} // namespace

HoroFn radon_v_serial(const FnV& f, int q, int depth) {
    int L = max_word_len_v(f);
    if (depth < std::max(1, L)) throw error("radon_v: depth below support radius");
    HoroFn F(Simplex::vertex, q, depth, -L, L);
    auto arcs = arc_words(q, depth);
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a)
        for (auto& [v, val] : f) F.at(a, h_index_v(v, arcs[size_t(a)])) += val;
    return F;
}

HoroFn radon_v(const FnV& f, int q, int depth) {
    int L = max_word_len_v(f);
    if (depth < std::max(1, L)) throw error("radon_v: depth below support radius");
    HoroFn F(Simplex::vertex, q, depth, -L, L);
    auto arcs = arc_words(q, depth);
    std::vector<std::pair<Word, Rat>> supp(f.begin(), f.end());
#pragma omp parallel for schedule(static)
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a)
        for (auto& [v, val] : supp) F.at(a, h_index_v(v, arcs[size_t(a)])) += val;
    return F;
}

HoroFn radon_e_serial(const FnE& f, int q, int depth) {
    int L = max_word_len_e(f);
    if (depth < std::max(1, L)) throw error("radon_e: depth below support radius");
    HoroFn F(Simplex::edge, q, depth, -L - 1, L + 1);
    auto arcs = arc_words(q, depth);
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a)
        for (auto& [e, val] : f) F.at(a, h_index_e(e, arcs[size_t(a)])) += val;
    return F;
}

HoroFn radon_e(const FnE& f, int q, int depth) {
    int L = max_word_len_e(f);
    if (depth < std::max(1, L)) throw error("radon_e: depth below support radius");
    HoroFn F(Simplex::edge, q, depth, -L - 1, L + 1);
    auto arcs = arc_words(q, depth);
    std::vector<std::pair<Edge, Rat>> supp(f.begin(), f.end());
#pragma omp parallel for schedule(static)
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a)
        for (auto& [e, val] : supp) F.at(a, h_index_e(e, arcs[size_t(a)])) += val;
    return F;
}

HoroFnF radon_f_serial(const FnF& f, int q, int depth) {
    int L = max_word_len_f(f);
    if (depth < std::max(1, L)) throw error("radon_f: depth below support radius");
    HoroFnF F(q, depth, -L - 1, L + 1, -L - 1, L + 2);
    auto arcs = arc_words(q, depth);
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a)
        for (auto& [fl, val] : f) {
            auto [ne, nv] = h_index_flag(fl, arcs[size_t(a)]);
            F.at(a, ne, nv) += val;
        }
    return F;
}

HoroFnF radon_f(const FnF& f, int q, int depth) {
    int L = max_word_len_f(f);
    if (depth < std::max(1, L)) throw error("radon_f: depth below support radius");
    HoroFnF F(q, depth, -L - 1, L + 1, -L - 1, L + 2);
    auto arcs = arc_words(q, depth);
    std::vector<std::pair<Flag, Rat>> supp(f.begin(), f.end());
#pragma omp parallel for schedule(static)
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a)
        for (auto& [fl, val] : supp) {
            auto [ne, nv] = h_index_flag(fl, arcs[size_t(a)]);
            F.at(a, ne, nv) += val;
        }
    return F;
}

Rat radon_at_ray_v(const FnV& f, const Word& ray, int n) {
    Rat s(0);
    for (auto& [v, val] : f)
        if (h_index_v(v, ray) == n) s += val;
    return s;
}

namespace {

// deterministic combination of per-thread partial sums (exact arithmetic,
// so the value is order-independent anyway)
template <class Work>
Rat parallel_arc_sum(std::int64_t narcs, Work&& work) {
    int nt = omp_get_max_threads();
    std::vector<Rat> part(size_t(nt), Rat(0));
#pragma omp parallel
    {
        int tid = omp_get_thread_num();
        Rat local(0);
#pragma omp for schedule(static)
        for (std::int64_t a = 0; a < narcs; ++a) local += work(a);
        part[size_t(tid)] = local;
    }
    Rat total(0);
    for (auto& p : part) total += p;
    return total;
}

} // namespace

Rat dual_radon_v_serial(const HoroFn& F, const Word& v) {
    if (F.kind != Simplex::vertex) throw error("dual_radon_v: vertex HoroFn required");
    if (F.depth < int(v.size())) throw error("dual_radon_v: depth < |v|");
    auto arcs = arc_words(F.q, F.depth);
    Rat nu = arc_measure_v(Arc{arcs[0]}, F.q); // isotropic: same for every arc
    Rat s(0);
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a) {
        int h = h_index_v(v, arcs[size_t(a)]);
        s += qpow(F.q, h) * F.get(a, h);
    }
    return s * nu;
}

Rat dual_radon_v(const HoroFn& F, const Word& v) {
    if (F.kind != Simplex::vertex) throw error("dual_radon_v: vertex HoroFn required");
    if (F.depth < int(v.size())) throw error("dual_radon_v: depth < |v|");
    auto arcs = arc_words(F.q, F.depth);
    Rat nu = arc_measure_v(Arc{arcs[0]}, F.q);
    Rat s = parallel_arc_sum(std::int64_t(arcs.size()), [&](std::int64_t a) {
        int h = h_index_v(v, arcs[size_t(a)]);
        return qpow(F.q, h) * F.get(a, h);
    });
    return s * nu;
}

Rat dual_radon_e_serial(const HoroFn& F, const Edge& e) {
    if (F.kind != Simplex::edge) throw error("dual_radon_e: edge HoroFn required");
    if (F.depth < int(e.base.size()) + 1) throw error("dual_radon_e: depth too small");
    auto arcs = arc_words(F.q, F.depth);
    Rat s(0);
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a) {
        int h = h_index_e(e, arcs[size_t(a)]);
        s += qpow(F.q, h) * F.get(a, h) * arc_measure_e(Arc{arcs[size_t(a)]}, F.q);
    }
    return s;
}

Rat dual_radon_e(const HoroFn& F, const Edge& e) {
    if (F.kind != Simplex::edge) throw error("dual_radon_e: edge HoroFn required");
    if (F.depth < int(e.base.size()) + 1) throw error("dual_radon_e: depth too small");
    auto arcs = arc_words(F.q, F.depth);
    return parallel_arc_sum(std::int64_t(arcs.size()), [&](std::int64_t a) {
        int h = h_index_e(e, arcs[size_t(a)]);
        return qpow(F.q, h) * F.get(a, h) * arc_measure_e(Arc{arcs[size_t(a)]}, F.q);
    });
}

HoroFn canonical_map_xi(const HoroFn& F) {
    if (F.kind != Simplex::vertex) throw error("canonical_map_xi: vertex HoroFn required");
    HoroFn G(Simplex::edge, F.q, F.depth, F.nmin, F.nmax + 1);
    auto arcs = arc_words(F.q, F.depth);
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a) {
        int c = (arcs[size_t(a)][0] == 0) ? 1 : 0;
        for (int n = F.nmin; n <= F.nmax; ++n) G.at(a, n + 1 - c) = F.at(a, n);
    }
    return G;
}

HoroFn canonical_map_xi_inv(const HoroFn& G) {
    if (G.kind != Simplex::edge) throw error("canonical_map_xi_inv: edge HoroFn required");
    HoroFn F(Simplex::vertex, G.q, G.depth, G.nmin - 1, G.nmax);
    auto arcs = arc_words(G.q, G.depth);
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a) {
        int c = (arcs[size_t(a)][0] == 0) ? 1 : 0;
        for (int n = F.nmin; n <= F.nmax; ++n) F.at(a, n) = G.get(a, n + 1 - c);
    }
    return F;
}

std::vector<Rat> radialize_v(const FnV& f, int R, int q) {
    std::vector<Rat> out(size_t(R) + 1, Rat(0));
    for (auto& [v, val] : f) {
        if (int(v.size()) > R) throw error("radialize_v: support outside ball");
        out[v.size()] += val;
    }
    for (int n = 0; n <= R; ++n) {
        Int cnt = (n == 0) ? Int(1) : Int(q + 1) * ipow(q, n - 1);
        out[size_t(n)] /= Rat(cnt);
    }
    return out;
}

std::vector<Rat> radialize_e(const FnE& f, int R, int q) {
    std::vector<Rat> out(size_t(R) + 1, Rat(0));
    for (auto& [e, val] : f) {
        int n = edge_norm(e);
        if (n > R) throw error("radialize_e: support outside ball");
        out[size_t(n)] += val;
    }
    for (int n = 0; n <= R; ++n) {
        Int cnt = (n == 0) ? Int(1) : Int(2) * ipow(q, n);
        out[size_t(n)] /= Rat(cnt);
    }
    return out;
}

std::map<int, Rat> radialize_horo(const HoroFn& F) {
    auto arcs = arc_words(F.q, F.depth);
    std::map<int, Rat> out;
    for (int n = F.nmin; n <= F.nmax; ++n) {
        Rat s(0);
        for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a) {
            Rat nu = F.kind == Simplex::vertex ? arc_measure_v(Arc{arcs[size_t(a)]}, F.q)
                                               : arc_measure_e(Arc{arcs[size_t(a)]}, F.q);
            s += F.at(a, n) * nu;
        }
        out[n] = s;
    }
    return out;
}

} // namespace horo
