#pragma once

#include <optional>
#include <utility>

#include "horofn.hpp"

namespace horo {

using FnV = std::map<Word, Rat>;
using FnE = std::map<Edge, Rat>;
using FnF = std::map<Flag, Rat>;

// h(v, v0, omega) = 2 N(v,v0,omega) - |v|; exact once |ray| >= |v|
int h_index_v(const Word& v, const Word& ray);
// index of v relative to an arbitrary base vertex (cocycle difference)
int h_index_v_based(const Word& v, const Word& base, const Word& ray);

Word omega_endpoint(const Edge& e, const Word& ray); // endpoint on the omega side
int h_index_e(const Edge& e, const Word& ray);       // Sigma_{e0} chart

// h(v,e,omega) = 1/2 + h(v, v_+(e), omega), doubled; h(e,v,omega) = -h(v,e,omega)
int h_index_mixed_twice(const Word& v, const Edge& e, const Word& ray);

// flag pair (nE, nV): nE is the vertex index of the edge endpoint away from
// omega, nV the index of the flag vertex; always nV == nE or nV == nE + 1
std::pair<int, int> h_index_flag(const Flag& f, const Word& ray);

// exhaustively verifies h(a,b,.) + h(b,c,.) = h(a,c,.) over ball(R) triples
bool cocycle_check(int q, int R, int nrays, unsigned seed);

// Radon transforms; OpenMP over arcs, with serial references kept for testing
HoroFn radon_v(const FnV& f, int q, int depth);
HoroFn radon_v_serial(const FnV& f, int q, int depth);
HoroFn radon_e(const FnE& f, int q, int depth);
HoroFn radon_e_serial(const FnE& f, int q, int depth);
HoroFnF radon_f(const FnF& f, int q, int depth);
HoroFnF radon_f_serial(const FnF& f, int q, int depth);

Rat radon_at_ray_v(const FnV& f, const Word& ray, int n); // single horosphere value

// R* F(v) = sum_n q^n Integral_{B(v,n)} F(.,n) dnu
Rat dual_radon_v(const HoroFn& F, const Word& v);
Rat dual_radon_v_serial(const HoroFn& F, const Word& v);
Rat dual_radon_e(const HoroFn& F, const Edge& e);
Rat dual_radon_e_serial(const HoroFn& F, const Edge& e);

// canonical bijection Xi: HorV -> HorE; identity on the far side of e0,
// index +1 on the near side
HoroFn canonical_map_xi(const HoroFn& F);
HoroFn canonical_map_xi_inv(const HoroFn& G);

std::vector<Rat> radialize_v(const FnV& f, int R, int q); // values over radius 0..R
std::vector<Rat> radialize_e(const FnE& f, int R, int q);
std::map<int, Rat> radialize_horo(const HoroFn& F); // nu-weighted average per index

} // namespace horo
