#pragma once

#include <optional>

#include "horospheres.hpp"

namespace horo {

// |h_n  intersect C(m)| intersection cardinalities
Int k_v(int n, int m, int q);
Int k_e(int n, int m, int q);

struct InvCoeffs {
    Simplex kind = Simplex::vertex;
    int nmin = 0, nmax = 0;
    std::vector<Rat> c;
    Rat at(int n) const {
        if (n < nmin || n > nmax) return Rat(0);
        return c[size_t(n - nmin)];
    }
};

// vertex choices: 1 (sparsest, one-sided) and 2; both satisfy
// d_n + q^n d_{-n} + (q-1) sum_{j=1..n-1} q^(j-1) d_{n-2j} = 0, d_0 = 1
InvCoeffs inv_coeffs_v(int choice, int N, int q);
// arbitrary seeds b_n for n < 0 extended through the recurrence
InvCoeffs inv_coeffs_v_custom(const std::map<int, Rat>& seeds, int N, int q);
InvCoeffs inv_coeffs_e(int choice, int N, int q);

// reads phi_n from a map, missing entries are 0
Rat invert_radial(const std::map<int, Rat>& phi, const InvCoeffs& coef);

// f(x) = sum_n c_n Integral VRad f(h(n,omega,x)) dnu_x via the chart change
// R f(n,omega;x) = R f(n + h(x,v0,omega), omega; v0), dnu_x = q^h dnu_0
Rat invert_full_v(const HoroFn& F, const Word& v, const InvCoeffs& coef);
Rat invert_full_v_serial(const HoroFn& F, const Word& v, const InvCoeffs& coef);
Rat invert_full_e(const HoroFn& F, const Edge& e, const InvCoeffs& coef);
Rat invert_full_e_serial(const HoroFn& F, const Edge& e, const InvCoeffs& coef);

// batch kernels: integerize F and the coefficients once, accumulate the arc
// sums in 128-bit integers (exact; falls back to rational arithmetic when the
// a-priori bounds do not fit), OpenMP over the evaluation points
std::vector<Rat> invert_full_v_batch(const HoroFn& F, const std::vector<Word>& pts,
                                     const InvCoeffs& coef);
std::vector<Rat> invert_full_e_batch(const HoroFn& F, const std::vector<Edge>& pts,
                                     const InvCoeffs& coef);

struct CavalieriReport {
    // (n, q^n Integral F(.,n) dnu - Integral F(.,-n) dnu) for n >= 1,
    // or the mixed-parameter analogue for n >= 0
    std::vector<std::pair<int, Rat>> residuals;
    bool arc_total_constant = true;
    Rat total; // sum over n of F(arc, n), when arc-independent
    bool pass() const {
        for (auto& [n, r] : residuals)
            if (r != 0) return false;
        return arc_total_constant;
    }
};

// <f,g> recovered from the transforms alone: the inner product
// sum_n q^n Integral F(.,n) (G(.,omega) * d-dagger)(n) dnu with
// d-dagger_n = d_{-n}, equal to the ell^2 pairing for any inversion family
Rat plancherel_pairing_v(const HoroFn& F, const HoroFn& G, const InvCoeffs& coef);

CavalieriReport cavalieri_check_v(const HoroFn& F);
CavalieriReport cavalieri_check_e(const HoroFn& F);
// mixed-parameter ranges: vertex functions against nu_{e0} with factor q^n,
// edge functions against nu_{v0} with factor q^(n+1)
CavalieriReport cavalieri_check_mixed_v(const HoroFn& F);
CavalieriReport cavalieri_check_mixed_e(const HoroFn& F);

// circle sums chi_j(f) and the row functionals of the mixed edge-Cavalieri
// system for Xi(VRad f); upper triangular with nonzero diagonal
Rat circle_sum(const FnV& f, int j);
Rat nonoverlap_row(const FnV& f, int n, int q);
std::optional<int> range_nonoverlap_probe(const FnV& f, int q, int nmax);

bool is_convex_v(const std::set<Word>& C);
// true iff (VRad f = 0 on every depth-visible horosphere disjoint from C)
// implies f = 0 off C; C must be convex
bool support_check(const FnV& f, const std::set<Word>& C, int q, int R, int depth);

struct FlagPair {
    FnE gE;
    FnV gV;
};

FlagPair flag_project(const FnF& h);       // fiber sums over pi_E, pi_V
Rat flag_image_residual(const FlagPair& p); // sum gV - sum gE; 0 iff liftable
// backward/forward sector difference formula; lambda-independent on valid pairs
FnF flag_lift(const FlagPair& p, const Rat& lambda, int q, int R);

HoroFn horoflag_project_v(const HoroFnF& U);
HoroFn horoflag_project_e(const HoroFnF& U);

// FRad^{-1} by factorization through the vertex and edge inversions
Rat invert_flag(const HoroFnF& U, const Flag& f, const InvCoeffs& dcoef,
                const InvCoeffs& lcoef, const Rat& lambda, int R);

} // namespace horo
