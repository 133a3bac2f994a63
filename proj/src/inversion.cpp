#include "horotree/inversion.hpp"

#include <omp.h>

#include <algorithm>

namespace horo {

Int k_v(int n, int m, int q) {
    if (m < 0) throw error("k_v: m must be >= 0");
    if (m == n) return 1;
    if (m == -n && m > 0) return ipow(q, m);
    if (m > std::abs(n) && (m - n) % 2 == 0) return Int(q - 1) * ipow(q, (m - n - 2) / 2);
    return 0;
}

Int k_e(int n, int m, int q) {
    if (m < 0) throw error("k_e: m must be >= 0");
    if (m == n) return 1;
    if (m == -n && m > 0) return ipow(q, m);
    if (m > std::abs(n) && (n + m) % 2 != 0) return Int(q - 1) * ipow(q, (m - n - 1) / 2);
    return 0;
}

InvCoeffs inv_coeffs_v(int choice, int N, int q) {
    InvCoeffs k;
    k.kind = Simplex::vertex;
    if (choice == 1) {
        k.nmin = 0;
        k.nmax = N;
        k.c.assign(size_t(N) + 1, Rat(0));
        k.c[0] = 1;
        for (int n = 2; n <= N; n += 2) k.c[size_t(n)] = Rat(1 - q);
    } else if (choice == 2) {
        k.nmin = -N;
        k.nmax = N;
        k.c.assign(2 * size_t(N) + 1, Rat(0));
        for (int n = -N; n <= N; ++n) {
            if (n % 2 != 0) continue;
            k.c[size_t(n + N)] = n <= 0 ? Rat(1) : Rat(Int(1 - q) - ipow(q, n));
        }
    } else {
        throw error("inv_coeffs_v: choice must be 1 or 2");
    }
    return k;
}

InvCoeffs inv_coeffs_v_custom(const std::map<int, Rat>& seeds, int N, int q) {
    for (auto& [n, b] : seeds) {
        if (n > 0) throw error("inv_coeffs_v_custom: seeds must have n < 0");
        if (n == 0 && b != 1) throw error("inv_coeffs_v_custom: seeds inconsistent with d_0 = 1");
    }
    InvCoeffs k;
    k.kind = Simplex::vertex;
    k.nmin = -N;
    k.nmax = N;
    k.c.assign(2 * size_t(N) + 1, Rat(0));
    auto d = [&](int n) -> Rat& { return k.c[size_t(n + N)]; };
    for (int n = -N; n < 0; ++n) {
        auto it = seeds.find(n);
        d(n) = it == seeds.end() ? Rat(0) : it->second;
    }
    d(0) = 1;
    // d_n = -q^n d_{-n} - (q-1) sum_{j=1}^{n-1} q^(j-1) d_{n-2j}
    for (int n = 1; n <= N; ++n) {
        Rat s = -qpow(q, n) * d(-n);
        for (int j = 1; j <= n - 1; ++j) s -= Rat(q - 1) * qpow(q, j - 1) * d(n - 2 * j);
        d(n) = s;
    }
    return k;
}

InvCoeffs inv_coeffs_e(int choice, int N, int q) {
    InvCoeffs k;
    k.kind = Simplex::edge;
    if (choice == 1) {
        k.nmin = 0;
        k.nmax = N;
        k.c.assign(size_t(N) + 1, Rat(0));
        k.c[0] = 1;
        for (int n = 1; n <= N; ++n)
            k.c[size_t(n)] = Rat(1 - q, 1 + q) * Rat(Int(1) - ipow(Int(-q), n));
    } else if (choice == 2) {
        k.nmin = -N;
        k.nmax = N;
        k.c.assign(2 * size_t(N) + 1, Rat(0));
        for (int n = -N; n <= 0; ++n) k.c[size_t(n + N)] = (n % 2 == 0) ? Rat(1) : Rat(-1);
        for (int n = 1; n <= N; ++n)
            k.c[size_t(n + N)] = Rat(2) * Rat(Int(1) - ipow(Int(-q), n), Int(1 + q)) - 1;
    } else {
        throw error("inv_coeffs_e: choice must be 1 or 2");
    }
    return k;
}

Rat invert_radial(const std::map<int, Rat>& phi, const InvCoeffs& coef) {
    Rat s(0);
    for (int n = coef.nmin; n <= coef.nmax; ++n) {
        Rat c = coef.at(n);
        if (c == 0) continue;
        auto it = phi.find(n);
        if (it != phi.end()) s += c * it->second;
    }
    return s;
}

namespace {

std::vector<std::pair<int, Rat>> nonzero_coeffs(const InvCoeffs& coef) {
    std::vector<std::pair<int, Rat>> out;
    for (int n = coef.nmin; n <= coef.nmax; ++n)
        if (coef.at(n) != 0) out.emplace_back(n, coef.at(n));
    return out;
}

// common-denominator integerization; ok == false when the values do not fit
struct Scaled {
    bool ok = false;
    std::int64_t den = 1;
    std::vector<std::int64_t> num;
};

Scaled scale_values(const std::vector<Rat>& vals, std::int64_t den_cap, std::int64_t num_cap) {
    Scaled s;
    Int den(1);
    for (auto& v : vals) {
        den = lcm(den, denominator(v));
        if (den > den_cap) return s;
    }
    s.den = den.convert_to<std::int64_t>();
    s.num.reserve(vals.size());
    for (auto& v : vals) {
        Int n = numerator(v) * (den / denominator(v));
        if (abs(n) > num_cap) return s;
        s.num.push_back(n.convert_to<std::int64_t>());
    }
    s.ok = true;
    return s;
}

template <class HIndex>
Rat invert_full_impl(const HoroFn& F, const InvCoeffs& coef, HIndex&& hidx, bool parallel) {
    auto arcs = circle_vertices(F.q, F.depth);
    auto cs = nonzero_coeffs(coef);
    auto term = [&](std::int64_t a) {
        int h = hidx(arcs[size_t(a)]);
        Rat inner(0);
        for (auto& [n, c] : cs) inner += c * F.get(a, n + h);
        if (inner == 0) return Rat(0);
        Rat nu = F.kind == Simplex::vertex ? arc_measure_v(Arc{arcs[size_t(a)]}, F.q)
                                           : arc_measure_e(Arc{arcs[size_t(a)]}, F.q);
        return qpow(F.q, h) * nu * inner;
    };
    std::int64_t A = std::int64_t(arcs.size());
    if (!parallel) {
        Rat s(0);
        for (std::int64_t a = 0; a < A; ++a) s += term(a);
        return s;
    }
    int nt = omp_get_max_threads();
    std::vector<Rat> part(size_t(nt), Rat(0));
#pragma omp parallel
    {
        Rat local(0);
#pragma omp for schedule(static)
        for (std::int64_t a = 0; a < A; ++a) local += term(a);
        part[size_t(omp_get_thread_num())] = local;
    }
    Rat s(0);
    for (auto& p : part) s += p;
    return s;
}

} // namespace

Rat invert_full_v(const HoroFn& F, const Word& v, const InvCoeffs& coef) {
    if (F.kind != Simplex::vertex || coef.kind != Simplex::vertex)
        throw error("invert_full_v: vertex data required");
    if (F.depth < int(v.size())) throw error("invert_full_v: depth < |v|");
    return invert_full_impl(F, coef, [&](const Word& a) { return h_index_v(v, a); }, true);
}

Rat invert_full_v_serial(const HoroFn& F, const Word& v, const InvCoeffs& coef) {
    if (F.kind != Simplex::vertex || coef.kind != Simplex::vertex)
        throw error("invert_full_v: vertex data required");
    if (F.depth < int(v.size())) throw error("invert_full_v: depth < |v|");
    return invert_full_impl(F, coef, [&](const Word& a) { return h_index_v(v, a); }, false);
}

Rat invert_full_e(const HoroFn& F, const Edge& e, const InvCoeffs& coef) {
    if (F.kind != Simplex::edge || coef.kind != Simplex::edge)
        throw error("invert_full_e: edge data required");
    if (F.depth < int(e.base.size()) + 1) throw error("invert_full_e: depth too small");
    return invert_full_impl(F, coef, [&](const Word& a) { return h_index_e(e, a); }, true);
}

Rat invert_full_e_serial(const HoroFn& F, const Edge& e, const InvCoeffs& coef) {
    if (F.kind != Simplex::edge || coef.kind != Simplex::edge)
        throw error("invert_full_e: edge data required");
    if (F.depth < int(e.base.size()) + 1) throw error("invert_full_e: depth too small");
    return invert_full_impl(F, coef, [&](const Word& a) { return h_index_e(e, a); }, false);
}

namespace {

// HIdx: (point index, arc word) -> horospherical index of the point
template <class HIdx>
std::vector<Rat> invert_batch_core(const HoroFn& F, const InvCoeffs& coef, size_t npts,
                                   int hbound, HIdx&& hidx) {
    auto arcs = circle_vertices(F.q, F.depth);
    auto cs = nonzero_coeffs(coef);
    std::vector<Rat> out(npts, Rat(0));
    if (npts == 0) return out;

    const std::int64_t den_cap = std::int64_t(1) << 31;
    const std::int64_t num_cap = std::int64_t(1) << 44;
    Scaled fz = scale_values(F.val, den_cap, num_cap);
    std::vector<Rat> cvals;
    cvals.reserve(cs.size());
    for (auto& [n, c] : cs) cvals.push_back(c);
    Scaled cz = scale_values(cvals, den_cap, num_cap);

    bool fast = fz.ok && cz.ok && hbound <= 28;
    Int sumC(0), maxF(0);
    if (fast) {
        for (auto x : cz.num) sumC += Int(x < 0 ? -x : x);
        for (auto x : fz.num) {
            Int ax(x < 0 ? -x : x);
            if (ax > maxF) maxF = ax;
        }
        Int inner_bound = sumC * maxF;
        if (inner_bound >= (Int(1) << 62)) fast = false;
        if (ipow(F.q, 2 * hbound) >= (Int(1) << 61)) fast = false;
        Int total_bound = inner_bound * Int(std::int64_t(arcs.size())) *
                          ipow(F.q, 2 * hbound) * Int(2 * F.q);
        if (fast && total_bound >= (Int(1) << 125)) fast = false;
    }

    if (!fast) {
        for (size_t p = 0; p < npts; ++p)
            out[p] = invert_full_impl(
                F, coef, [&](const Word& a) { return hidx(p, a); }, true);
        return out;
    }

    std::vector<std::int64_t> pw(size_t(2 * hbound) + 1);
    pw[0] = 1;
    for (size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * F.q;
    const int width = F.width();
    const bool edge_kind = F.kind == Simplex::edge;
    Int scale_den = Int(fz.den) * Int(cz.den);
    if (edge_kind)
        scale_den *= Int(2) * ipow(F.q, F.depth);
    else
        scale_den *= Int(F.q + 1) * ipow(F.q, F.depth - 1);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t p = 0; p < std::int64_t(npts); ++p) {
        __int128 acc = 0;
        for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a) {
            int h = hidx(size_t(p), arcs[size_t(a)]);
            std::int64_t inner = 0;
            const std::int64_t* row = fz.num.data() + a * width;
            for (size_t k = 0; k < cs.size(); ++k) {
                int n = cs[k].first + h;
                if (n < F.nmin || n > F.nmax) continue;
                inner += cz.num[k] * row[n - F.nmin];
            }
            if (inner == 0) continue;
            std::int64_t m = edge_kind ? (arcs[size_t(a)][0] == 0 ? F.q : 1) : 1;
            acc += __int128(pw[size_t(h + hbound)]) * m * inner;
        }
        bool neg = acc < 0;
        if (neg) acc = -acc;
        Int hi = (std::uint64_t)(acc >> 64), lo = (std::uint64_t)acc;
        Int num = (hi << 64) | lo;
        if (neg) num = -num;
        out[size_t(p)] = Rat(num, scale_den) * qpow(F.q, -hbound);
    }
    return out;
}

} // namespace

std::vector<Rat> invert_full_v_batch(const HoroFn& F, const std::vector<Word>& pts,
                                     const InvCoeffs& coef) {
    if (F.kind != Simplex::vertex || coef.kind != Simplex::vertex)
        throw error("invert_full_v_batch: vertex data required");
    int hb = 1;
    for (auto& v : pts) {
        if (F.depth < int(v.size())) throw error("invert_full_v_batch: depth < |v|");
        hb = std::max(hb, int(v.size()));
    }
    return invert_batch_core(F, coef, pts.size(), hb, [&](size_t p, const Word& a) {
        return h_index_v(pts[p], a);
    });
}

std::vector<Rat> invert_full_e_batch(const HoroFn& F, const std::vector<Edge>& pts,
                                     const InvCoeffs& coef) {
    if (F.kind != Simplex::edge || coef.kind != Simplex::edge)
        throw error("invert_full_e_batch: edge data required");
    int hb = 2;
    std::vector<std::pair<Word, Word>> ends;
    ends.reserve(pts.size());
    for (auto& e : pts) {
        if (F.depth < int(e.base.size()) + 1) throw error("invert_full_e_batch: depth too small");
        hb = std::max(hb, int(e.base.size()) + 2);
        ends.emplace_back(e.near(), e.far());
    }
    return invert_batch_core(F, coef, pts.size(), hb, [&](size_t p, const Word& a) {
        int hn = 2 * common_prefix(ends[p].first, a) - int(ends[p].first.size());
        int hf = 2 * common_prefix(ends[p].second, a) - int(ends[p].second.size());
        return std::max(hn, hf) - (a[0] == 0 ? 1 : 0);
    });
}

Rat plancherel_pairing_v(const HoroFn& F, const HoroFn& G, const InvCoeffs& coef) {
    if (F.kind != Simplex::vertex || G.kind != Simplex::vertex || coef.kind != Simplex::vertex)
        throw error("plancherel_pairing_v: vertex data required");
    if (F.depth != G.depth || F.q != G.q)
        throw error("plancherel_pairing_v: mixed depths");
    auto arcs = circle_vertices(F.q, F.depth);
    Rat nu = arc_measure_v(Arc{arcs[0]}, F.q);
    Rat total(0);
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a) {
        Rat s(0);
        for (int n = F.nmin; n <= F.nmax; ++n) {
            if (F.at(a, n) == 0) continue;
            Rat conv(0); // (G(a,.) * d-dagger)(n) = sum_j G(a,j) d_{j-n}
            for (int j = G.nmin; j <= G.nmax; ++j) {
                Rat c = coef.at(j - n);
                if (c != 0) conv += G.at(a, j) * c;
            }
            s += F.at(a, n) * qpow(F.q, n) * conv;
        }
        total += s;
    }
    return total * nu;
}

namespace {

CavalieriReport plain_cavalieri(const HoroFn& F) {
    CavalieriReport rep;
    auto r = radialize_horo(F);
    auto get = [&](int n) { return r.count(n) ? r[n] : Rat(0); };
    for (int n = 1; n <= std::max(std::abs(F.nmin), F.nmax); ++n)
        rep.residuals.emplace_back(n, qpow(F.q, n) * get(n) - get(-n));
    auto arcs = circle_vertices(F.q, F.depth);
    bool first = true;
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a) {
        Rat tot(0);
        for (int n = F.nmin; n <= F.nmax; ++n) tot += F.at(a, n);
        if (first) {
            rep.total = tot;
            first = false;
        } else if (tot != rep.total) {
            rep.arc_total_constant = false;
        }
    }
    return rep;
}

} // namespace

CavalieriReport cavalieri_check_v(const HoroFn& F) {
    if (F.kind != Simplex::vertex) throw error("cavalieri_check_v: vertex HoroFn required");
    return plain_cavalieri(F);
}

CavalieriReport cavalieri_check_e(const HoroFn& F) {
    if (F.kind != Simplex::edge) throw error("cavalieri_check_e: edge HoroFn required");
    return plain_cavalieri(F);
}

CavalieriReport cavalieri_check_mixed_v(const HoroFn& F) {
    if (F.kind != Simplex::vertex) throw error("cavalieri_check_mixed_v: vertex HoroFn required");
    CavalieriReport rep;
    auto arcs = circle_vertices(F.q, F.depth);
    int top = std::max(std::abs(F.nmin), F.nmax);
    for (int n = 0; n <= top; ++n) {
        Rat lhs(0), rhs(0);
        for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a) {
            int c = (arcs[size_t(a)][0] == 0) ? 1 : 0;
            Rat nu = arc_measure_e(Arc{arcs[size_t(a)]}, F.q);
            lhs += F.get(a, n + c) * nu;
            rhs += F.get(a, -n - 1 + c) * nu;
        }
        rep.residuals.emplace_back(n, qpow(F.q, n) * lhs - rhs);
    }
    rep.total = plain_cavalieri(F).total;
    return rep;
}

CavalieriReport cavalieri_check_mixed_e(const HoroFn& G) {
    if (G.kind != Simplex::edge) throw error("cavalieri_check_mixed_e: edge HoroFn required");
    CavalieriReport rep;
    auto arcs = circle_vertices(G.q, G.depth);
    Rat nu = arc_measure_v(Arc{arcs[0]}, G.q);
    int top = std::max(std::abs(G.nmin), G.nmax);
    for (int n = 0; n <= top; ++n) {
        Rat lhs(0), rhs(0);
        for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a) {
            int c = (arcs[size_t(a)][0] == 0) ? 1 : 0;
            lhs += G.get(a, n + 1 - c);
            rhs += G.get(a, -n - c);
        }
        rep.residuals.emplace_back(n, (qpow(G.q, n + 1) * lhs - rhs) * nu);
    }
    rep.total = plain_cavalieri(G).total;
    return rep;
}

Rat circle_sum(const FnV& f, int j) {
    Rat s(0);
    for (auto& [w, val] : f)
        if (int(w.size()) == j) s += val;
    return s;
}

Rat nonoverlap_row(const FnV& f, int n, int q) {
    int R = 0;
    for (auto& [w, val] : f) R = std::max(R, int(w.size()));
    auto chi = [&](int j) { return j > R ? Rat(0) : circle_sum(f, j); };
    Rat s(0);
    if (n == 0) {
        s = Rat(Int(q) * (q + 1)) * chi(0) - Rat(q) * chi(1);
        for (int j = 1; 2 * j <= R; ++j)
            s += Rat(q - 1) * (qpow(q, 1 - j) * chi(2 * j) - qpow(q, -j) * chi(2 * j + 1));
    } else {
        s = Rat(Int(q) * q) * chi(n) - Rat(q) * chi(n + 1);
        for (int j = 1; 2 * j + n <= R; ++j)
            s += Rat(q - 1) * (qpow(q, 1 - j) * chi(2 * j + n) - qpow(q, -j) * chi(2 * j + n + 1));
    }
    return s;
}

std::optional<int> range_nonoverlap_probe(const FnV& f, int q, int nmax) {
    for (int n = 0; n <= nmax; ++n)
        if (nonoverlap_row(f, n, q) != 0) return n;
    return std::nullopt;
}

bool is_convex_v(const std::set<Word>& C) {
    for (auto& u : C)
        for (auto& v : C) {
            if (u >= v) continue;
            for (auto& w : geodesic(u, v))
                if (!C.count(w)) return false;
        }
    return true;
}

bool support_check(const FnV& f, const std::set<Word>& C, int q, int R, int depth) {
    if (!is_convex_v(C)) throw error("support_check: C is not convex");
    for (auto& c : C)
        if (int(c.size()) > depth) throw error("support_check: depth too small for C");
    auto arcs = circle_vertices(q, depth);
    bool premise = true;
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()) && premise; ++a) {
        const Word& ray = arcs[size_t(a)];
        for (int n = -R; n <= R && premise; ++n) {
            bool meets_C = false;
            for (auto& c : C)
                if (h_index_v(c, ray) == n) {
                    meets_C = true;
                    break;
                }
            if (meets_C) continue;
            Rat s(0);
            for (auto& [v, val] : f)
                if (h_index_v(v, ray) == n) s += val;
            if (s != 0) premise = false;
        }
    }
    bool conclusion = true;
    for (auto& [v, val] : f)
        if (val != 0 && !C.count(v)) {
            conclusion = false;
            break;
        }
    return !premise || conclusion;
}

FlagPair flag_project(const FnF& h) {
    FlagPair p;
    for (auto& [fl, val] : h) {
        p.gE[fl.edge] += val;
        p.gV[fl.vertex()] += val;
    }
    return p;
}

Rat flag_image_residual(const FlagPair& p) {
    Rat sv(0), se(0);
    for (auto& [v, val] : p.gV) sv += val;
    for (auto& [e, val] : p.gE) se += val;
    return sv - se;
}

namespace {

Rat flag_lift_at(const FlagPair& p, const Rat& lambda, const Flag& fl) {
    // backward sums: d(., e_f) < d(., v_f); forward sums are the complements
    Rat back_e(0), tot_e(0), back_v(0), tot_v(0);
    Word vf = fl.vertex();
    for (auto& [e, val] : p.gE) {
        tot_e += val;
        if (2 * dist_e(e, fl.edge) < dist_ve_twice(vf, e)) back_e += val;
    }
    for (auto& [v, val] : p.gV) {
        tot_v += val;
        if (dist_ve_twice(v, fl.edge) < 2 * dist_v(v, vf)) back_v += val;
    }
    Rat fwd_e = tot_e - back_e, fwd_v = tot_v - back_v;
    return lambda * (back_e - back_v) - (1 - lambda) * (fwd_e - fwd_v);
}

} // namespace

FnF flag_lift(const FlagPair& p, const Rat& lambda, int q, int R) {
    Rat res = flag_image_residual(p);
    if (res != 0)
        throw error("flag_lift: image condition violated, residual " + rat_str(res));
    FnF out;
    for (const Flag& fl : ball_flags(q, R)) {
        Rat v = flag_lift_at(p, lambda, fl);
        if (v != 0) out[fl] = v;
    }
    return out;
}

HoroFn horoflag_project_v(const HoroFnF& U) {
    HoroFn V(Simplex::vertex, U.q, U.depth, U.vNmin, U.vNmax);
    std::int64_t A = arc_count(U.q, U.depth);
    for (std::int64_t a = 0; a < A; ++a)
        for (int n = U.vNmin; n <= U.vNmax; ++n)
            V.at(a, n) = U.get(a, n, n) + U.get(a, n - 1, n);
    return V;
}

HoroFn horoflag_project_e(const HoroFnF& U) {
    HoroFn E(Simplex::edge, U.q, U.depth, U.eNmin, U.eNmax + 1);
    auto arcs = circle_vertices(U.q, U.depth);
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a) {
        int c = (arcs[size_t(a)][0] == 0) ? 1 : 0;
        for (int k = E.nmin; k <= E.nmax; ++k)
            E.at(a, k) = U.get(a, k - 1 + c, k - 1 + c) + U.get(a, k - 1 + c, k + c);
    }
    return E;
}

Rat invert_flag(const HoroFnF& U, const Flag& f, const InvCoeffs& dcoef, const InvCoeffs& lcoef,
                const Rat& lambda, int R) {
    HoroFn UV = horoflag_project_v(U);
    HoroFn UE = horoflag_project_e(U);
    FlagPair p;
    for (const Word& v : ball_vertices(U.q, R + 1)) {
        Rat val = invert_full_v(UV, v, dcoef);
        if (val != 0) p.gV[v] = val;
    }
    for (const Edge& e : ball_edges(U.q, R)) {
        Rat val = invert_full_e(UE, e, lcoef);
        if (val != 0) p.gE[e] = val;
    }
    Rat res = flag_image_residual(p);
    if (res != 0)
        throw error("invert_flag: projected pair fails the image condition, residual " +
                    rat_str(res));
    return flag_lift_at(p, lambda, f);
}

} // namespace horo
