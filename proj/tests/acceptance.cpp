// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "horotree/inversion.hpp"
#include "horotree/io.hpp"
#include "horotree/spectral.hpp"

using namespace horo;

namespace {

struct Result {
    int id;
    std::string name;
    bool pass;
    double secs;
    std::string note;
};

std::vector<Result> results;

template <class F>
void criterion(int id, const std::string& name, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back({id, name, ok, secs, note});
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                secs, note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
}

Word rep_vertex(int n) {
    Word v;
    for (int i = 0; i < n; ++i) v.push_back(i % 2);
    return v;
}

Word fixed_ray(int q, int len) {
    Word ray;
    for (int i = 0; i < len; ++i) ray.push_back(i % 2 == 0 ? 0 : std::min(1, q));
    return ray;
}

bool crit1(std::string& note) {
    for (int q : {2, 3}) {
        Word ray = fixed_ray(q, 8);
        for (int m = 0; m <= 6; ++m) {
            std::map<int, Int> cv, ce;
            for (auto& v : circle_vertices(q, m)) cv[h_index_v(v, ray)]++;
            for (auto& e : circle_edges(q, m)) ce[h_index_e(e, ray)]++;
            for (int n = -m - 1; n <= m + 1; ++n) {
                if ((cv.count(n) ? cv[n] : Int(0)) != k_v(n, m, q)) return false;
                if ((ce.count(n) ? ce[n] : Int(0)) != k_e(n, m, q)) return false;
            }
        }
    }
    note = "k_V, k_E == brute-force counts, q in {2,3}, m <= 6";
    return true;
}

bool crit2(std::string& note) {
    for (int q : {2, 3}) {
        InvCoeffs d1 = inv_coeffs_v(1, 10, q), d2 = inv_coeffs_v(2, 10, q);
        InvCoeffs l1 = inv_coeffs_e(1, 10, q), l2 = inv_coeffs_e(2, 10, q);
        auto ballv = ball_vertices(q, 3);
        auto balle = ball_edges(q, 3);
        for (int i = 0; i < 100; ++i) {
            FnV f = random_fn_v(q, 5, unsigned(1000 + 17 * q + i));
            HoroFn F = radon_v(f, q, 5);
            auto rec1 = invert_full_v_batch(F, ballv, d1);
            auto rec2 = invert_full_v_batch(F, ballv, d2);
            for (size_t k = 0; k < ballv.size(); ++k) {
                Rat want = f.count(ballv[k]) ? f.at(ballv[k]) : Rat(0);
                if (rec1[k] != want || rec2[k] != want) return false;
            }
            FnE g = random_fn_e(q, 5, unsigned(2000 + 19 * q + i));
            HoroFn G = radon_e(g, q, 6);
            auto re1 = invert_full_e_batch(G, balle, l1);
            auto re2 = invert_full_e_batch(G, balle, l2);
            for (size_t k = 0; k < balle.size(); ++k) {
                Rat want = g.count(balle[k]) ? g.at(balle[k]) : Rat(0);
                if (re1[k] != want || re2[k] != want) return false;
            }
        }
    }
    note = "100 seeded functions per kind per q, exact on ball(3), both coefficient choices";
    return true;
}

bool crit3(std::string& note) {
    for (int q : {2, 3}) {
        for (int i = 0; i < 10; ++i) {
            FnV f = random_fn_v(q, 3, unsigned(3000 + i));
            if (!cavalieri_check_v(radon_v(f, q, 4)).pass()) return false;
            FnE g = random_fn_e(q, 3, unsigned(3100 + i));
            if (!cavalieri_check_e(radon_e(g, q, 4)).pass()) return false;
        }
        // canonical counterexample: Xi(radon_e delta_e0) read on HorV fails at
        // n = 1 with the q/(q+1) vs 0 pattern
        HoroFn X = canonical_map_xi_inv(radon_e(FnE{{reference_edge(), Rat(1)}}, q, 3));
        auto r = radialize_horo(X);
        if (r[1] != 0) return false;
        if (r[-1] != Rat(q, q + 1)) return false;
        auto rep = cavalieri_check_v(X);
        bool found = false;
        for (auto& [n, res] : rep.residuals)
            if (n == 1) {
                found = true;
                if (res != Rat(-q, q + 1)) return false;
            } else if (res != 0) {
                return false;
            }
        if (!found) return false;
    }
    note = "images pass exactly; counterexample residual at n=1 is q/(q+1) vs 0";
    return true;
}

bool crit4(std::string& note) {
    for (int q : {2, 3}) {
        // upper-triangular coefficient matrix with nonzero diagonal
        for (int n = 0; n <= 6; ++n)
            for (int j = 0; j <= 6; ++j) {
                FnV basis;
                for (auto& v : circle_vertices(q, j)) basis[v] = 1;
                Rat row = nonoverlap_row(basis, n, q);
                if (j < n && row != 0) return false;
                if (j == n && row == 0) return false;
            }
        // rows 0..6 vanish only when all circle sums vanish
        for (int i = 0; i < 20; ++i) {
            FnV f = random_fn_v(q, 3, unsigned(4000 + i));
            bool chizero = true;
            for (int j = 0; j <= 6; ++j)
                if (circle_sum(f, j) != 0) chizero = false;
            bool rowszero = !range_nonoverlap_probe(f, q, 6).has_value();
            if (chizero != rowszero) return false;
        }
        // balanced functions (all circle sums zero) pass every row
        FnV bal;
        bal[word_parse("0", q)] = Rat(5, 3);
        bal[word_parse("1", q)] = Rat(-5, 3);
        bal[word_parse("010", q)] = Rat(2);
        bal[word_parse("121", q)] = Rat(-2);
        if (range_nonoverlap_probe(bal, q, 6).has_value()) return false;
        if (!range_nonoverlap_probe(FnV{{{}, Rat(1)}}, q, 6).has_value()) return false;
    }
    note = "triangular structure verified; rows vanish iff circle sums vanish";
    return true;
}

bool crit5(std::string& note) {
    std::mt19937_64 rng(5005);
    std::uniform_real_distribution<double> re(0.06, 0.94), im(-2.0, 2.0);
    for (int q : {2, 3}) {
        for (int t = 0; t < 25; ++t) {
            Cpx z(re(rng), im(rng));
            if (std::abs(z.real() - 0.5) < 0.02) z += 0.05;
            if (eigen_residual(q, z, Simplex::vertex, 8) >= 1e-12) return false;
            if (eigen_residual(q, z, Simplex::edge, 8) >= 1e-12) return false;
            // Weyl symmetry
            for (int n = 0; n <= 8; ++n)
                if (std::abs(spherical_v(q, z, n) - spherical_v(q, 1.0 - z, n)) >= 1e-12)
                    return false;
            // boundary-integral oracle (exact rational arc sums)
            for (int n = 0; n <= 6; ++n) {
                Word v = rep_vertex(n);
                Cpx sv = 0.0;
                for (auto& a : partition(q, n + 1))
                    sv += qz(q, z * double(h_index_v(v, a.prefix))) *
                          to_double(arc_measure_v(a, q));
                if (std::abs(sv - spherical_v(q, z, n)) >= 1e-12) return false;
                Edge e = representative_edge(n);
                Cpx se = 0.0;
                for (auto& a : partition(q, n + 2))
                    se += qz(q, z * double(h_index_e(e, a.prefix))) *
                          to_double(arc_measure_e(a, q));
                if (std::abs(se - spherical_e(q, z, n)) >= 1e-12) return false;
            }
        }
        // critical-line realness
        double L = std::numbers::pi / std::log(double(q));
        for (int k = 1; k < 25; ++k) {
            Cpx z(0.5, L * k / 25.0);
            for (int n = 0; n <= 8; ++n) {
                if (std::abs(spherical_v(q, z, n).imag()) >= 1e-12) return false;
                if (std::abs(spherical_e(q, z, n).imag()) >= 1e-12) return false;
            }
        }
    }
    note = "25 z per q: eigen residuals, arc-sum oracle, Weyl symmetry, realness";
    return true;
}

bool crit6(std::string& note) {
    QuadratureGrid grid(512);
    std::mt19937_64 rng(6006);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    for (int q : {2, 3}) {
        for (int i = 0; i < 20; ++i) {
            RadialSeq hv{Simplex::vertex, {}}, he{Simplex::edge, {}};
            for (int n = 0; n <= 5; ++n) {
                hv.v.push_back(Rat(num(rng), den(rng)));
                he.v.push_back(Rat(num(rng), den(rng)));
            }
            if (std::abs(plancherel_norm2_v(hv, q, grid) - norm2_direct(hv, q)) >=
                1e-8 * std::max(1.0, norm2_direct(hv, q)))
                return false;
            if (std::abs(plancherel_norm2_e(he, q, grid) - norm2_direct(he, q)) >=
                1e-8 * std::max(1.0, norm2_direct(he, q)))
                return false;
            for (int n = 0; n <= 4; ++n) {
                if (std::abs(spherical_inversion_v(hv, n, q, grid) - to_double(hv.v[size_t(n)])) >=
                    1e-8)
                    return false;
                if (std::abs(spherical_inversion_e(he, n, q, grid) - to_double(he.v[size_t(n)])) >=
                    1e-8)
                    return false;
            }
        }
    }
    std::ostringstream os;
    os << "validated constants C_V = q ln q/(2pi(q+1)), C_E = ln q/(4pi) + atom "
          "(q-1)/(q+1) at -1/q; transcribed constants off by pi";
    note = os.str();
    return true;
}

bool crit7(std::string& note) {
    for (int q : {2, 3}) {
        HoroFn F = radon_v(FnV{{{}, Rat(1)}}, q, 8);
        for (int n = 0; n <= 8; ++n)
            if (dual_radon_v(F, rep_vertex(n)) != psi_closed_v(q, n)) return false;
        HoroFn G = radon_e(FnE{{reference_edge(), Rat(1)}}, q, 9);
        for (int n = 0; n <= 8; ++n)
            if (dual_radon_e(G, representative_edge(n)) != psi_closed_e(q, n)) return false;
        double L = std::numbers::pi / std::log(double(q));
        for (int k = 1; k < 100; ++k) {
            double t = L * k / 100.0;
            double th = t * std::log(double(q));
            double want = 1.0 + double(q - 1) * (q - 1) / (4.0 * q * std::sin(th) * std::sin(th));
            // 1e-12 relative: the values blow up near the endpoint poles
            double tol = 1e-12 * std::max(1.0, want);
            if (std::abs(symbol_psi_hat_e(q, Cpx(0.5, t)).real() - want) >= tol) return false;
            if (std::abs(symbol_psi_hat_e(q, Cpx(0.5, t)).imag()) >= tol) return false;
        }
        double lo = 1e300;
        for (int k = 1; k < 1000; ++k)
            lo = std::min(lo, std::abs(symbol_psi_hat_v(q, Cpx(0.5, L * k / 1000.0))));
        if (!(lo > 0.0)) return false;
    }
    note = "dual(radon(delta)) == Psi exactly for n <= 8; edge symbol matches "
           "1+(q-1)^2/(4q sin^2); vertex symbol min modulus > 0";
    return true;
}

bool crit8(std::string& note) {
    int q = 2;
    // Phi decay: |Phi(n)| q^{n/2} (1+n)^3 bounded
    QuadratureGrid fine(1024);
    double bound = 0.0;
    for (int n = 0; n <= 10; ++n)
        bound = std::max(bound, std::abs(blur_inverse_phi(n, q, fine)) *
                                    std::pow(double(q), n / 2.0) * std::pow(1.0 + n, 3.0));
    bool decay_ok = bound < 16.0;
    // the ladder, literal target delta_{e0} as specified
    double r1 = blur_roundtrip_residual(6, q, QuadratureGrid(256));
    double r2 = blur_roundtrip_residual(8, q, QuadratureGrid(512));
    double r3 = blur_roundtrip_residual(10, q, fine);
    bool monotone = r1 > r2 && r2 > r3;
    bool small = r3 < 1e-3;
    // attainable target: identity minus the atom projection
    double s1 = blur_roundtrip_residual_range(6, q, QuadratureGrid(256));
    double s2 = blur_roundtrip_residual_range(8, q, QuadratureGrid(512));
    double s3 = blur_roundtrip_residual_range(10, q, fine);
    // vertex kernel roundtrip, which does converge to delta
    double v1 = blur_roundtrip_residual_v(6, q, QuadratureGrid(256));
    double v2 = blur_roundtrip_residual_v(8, q, QuadratureGrid(512));
    double v3 = blur_roundtrip_residual_v(10, q, fine);
    // extended ladder: convergence is geometric ~ q^{-R/2}, crossing 1e-3
    // near R = 16 for the vertex kernel
    QuadratureGrid g2048(2048);
    double s4 = blur_roundtrip_residual_range(14, q, g2048);
    double v4 = blur_roundtrip_residual_v(14, q, g2048);
    double v5 = blur_roundtrip_residual_v(16, q, g2048);
    std::ostringstream os;
    os.precision(3);
    os << "delta-target ladder " << r1 << " -> " << r2 << " -> " << r3
       << " plateaus at the eta_1 atom mass (q-1)/(q+1) = " << edge_atom_mass(q)
       << " because Psi-hat^E vanishes at the -1/q eigenvalue, so no Phi satisfies "
          "Phi*Psi = delta; attainable-target (identity minus atom) ladder "
       << s1 << " -> " << s2 << " -> " << s3 << " -> " << s4 << "(R=14)"
       << (s1 > s2 && s2 > s3 && s3 > s4 ? " monotone" : " NOT monotone")
       << "; vertex-kernel delta ladder " << v1 << " -> " << v2 << " -> " << v3 << " -> " << v4
       << "(R=14) -> " << v5 << "(R=16" << (v5 < 1e-3 ? ", < 1e-3)" : ")")
       << "; decay bound sup |Phi| q^{n/2}(1+n)^3 = " << bound;
    note = os.str();
    return monotone && small && decay_ok;
}

bool crit9(std::string& note) {
    Rat xi = default_xi_flag();
    for (int q : {2, 3}) {
        Flag f0 = reference_flag();
        if (dist_f(f0, f0.flip(), xi) != 1 - 2 * xi) return false;
        for (int a = 1; a <= q; ++a)
            if (dist_f(f0, Flag(Edge({}, a), false), xi) != 2 * xi) return false;
        // exhaustive classification on ball 3
        int depth = 5;
        auto flags = ball_flags(q, 3);
        for (auto& arc : partition(q, depth))
            for (auto& fl : flags) {
                auto [ne, nv] = h_index_flag(fl, arc.prefix);
                if (nv != ne && nv != ne + 1) return false;
            }
    }
    // FRad roundtrip on 50 random flag functions, exact; lambda-independent
    int q = 2, R = 3, D = 5;
    InvCoeffs d = inv_coeffs_v(1, 12, q), l = inv_coeffs_e(1, 12, q);
    auto flags = ball_flags(q, R);
    for (int i = 0; i < 50; ++i) {
        FnF h = random_fn_f(q, R, unsigned(9000 + i));
        HoroFnF U = radon_f(h, q, D);
        HoroFn UV = horoflag_project_v(U), UE = horoflag_project_e(U);
        FlagPair p;
        for (auto& v : ball_vertices(q, R + 1)) {
            Rat val = invert_full_v(UV, v, d);
            if (val != 0) p.gV[v] = val;
        }
        for (auto& e : ball_edges(q, R)) {
            Rat val = invert_full_e(UE, e, l);
            if (val != 0) p.gE[e] = val;
        }
        if (flag_image_residual(p) != 0) return false;
        for (const Rat& lam : {Rat(0), Rat(1), Rat(1, 2)}) {
            FnF rec = flag_lift(p, lam, q, R);
            if (rec != h) return false;
        }
    }
    // the image condition is enforced
    FlagPair bad;
    bad.gV[{}] = 1;
    try {
        flag_lift(bad, Rat(1, 2), q, 1);
        return false;
    } catch (const error&) {
    }
    note = "distance classes, exhaustive (nE,nV) classification, 50 exact roundtrips, "
           "lambda-independence, image condition enforced";
    return true;
}

bool crit10(std::string& note) {
    int q = 2, R = 3, D = 5;
    // all convex sets of diameter <= 2 in ball(3): subsets of closed unit
    // balls around centers
    std::set<std::set<Word>> sets;
    for (auto& c : ball_vertices(q, R)) {
        std::vector<Word> cl{c};
        for (auto& u : neighbors(c, q))
            if (int(u.size()) <= R) cl.push_back(u);
        int m = int(cl.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::set<Word> C;
            for (int b = 0; b < m; ++b)
                if (mask & (1 << b)) C.insert(cl[size_t(b)]);
            bool diam_ok = true;
            for (auto& x : C)
                for (auto& y : C)
                    if (dist_v(x, y) > 2) diam_ok = false;
            if (diam_ok && is_convex_v(C)) sets.insert(C);
        }
    }
    int checked = 0;
    for (auto& C : sets) {
        for (auto& w : ball_vertices(q, R)) {
            if (!support_check(FnV{{w, Rat(1)}}, C, q, R, D)) return false;
            ++checked;
        }
        FnV inside;
        for (auto& c : C) inside[c] = Rat(3, 2);
        if (!support_check(inside, C, q, R, D)) return false;
        FnV rnd = random_fn_v(q, 2, unsigned(10000 + checked));
        if (!support_check(rnd, C, q, R, D)) return false;
    }
    std::ostringstream os;
    os << sets.size() << " convex sets, point masses + random functions";
    note = os.str();
    return true;
}

} // namespace

int main() {
    std::printf("acceptance suite: horospherical analysis on homogeneous trees\n");
    criterion(1, "intersection tables vs enumeration", crit1);
    criterion(2, "exact radon inversion roundtrips", crit2);
    criterion(3, "cavalieri range + canonical counterexample", crit3);
    criterion(4, "range non-overlap row system", crit4);
    criterion(5, "spherical function identities", crit5);
    criterion(6, "plancherel norms and spherical inversion", crit6);
    criterion(7, "back-projection kernels and symbols", crit7);
    criterion(8, "blur inversion convergence (literal delta target)", crit8);
    criterion(9, "flag pipeline", crit9);
    criterion(10, "support theorem", crit10);

    bool all = true;
    double timing[3] = {0, 0, 0};
    for (auto& r : results) {
        all = all && r.pass;
        if (r.id == 1) timing[0] = r.secs;
        if (r.id == 2) timing[1] = r.secs;
        if (r.id == 6) timing[2] = r.secs;
    }
    bool time_ok = timing[0] < 5.0 && timing[1] < 60.0 && timing[2] < 30.0;
    std::printf("runtime budgets: crit1 %.2fs (<5s), crit2 %.2fs (<60s), crit6 %.2fs (<30s): %s\n",
                timing[0], timing[1], timing[2], time_ok ? "ok" : "EXCEEDED");
    int passed = 0;
    for (auto& r : results) passed += r.pass;
    std::printf("%d/%d criteria passed\n", passed, int(results.size()));
    return (all && time_ok) ? 0 : 1;
}
