#pragma once

#include <iosfwd>

#include "horospheres.hpp"

namespace horo {

// function I/O is JSON with word-string keys; tables and curves are CSV
FnV fn_v_from_json(const std::string& text);
FnE fn_e_from_json(const std::string& text);
std::string fn_v_to_json(const FnV& f, int q);
std::string fn_e_to_json(const FnE& f, int q);

void write_horofn_csv(std::ostream& os, const HoroFn& F);
void write_horofn_f_csv(std::ostream& os, const HoroFnF& F);

std::string fmt_double(double x); // locale-free, deterministic

// seeded random rational functions for demos and roundtrips
FnV random_fn_v(int q, int R, unsigned seed);
FnE random_fn_e(int q, int R, unsigned seed);
FnF random_fn_f(int q, int R, unsigned seed);

} // namespace horo
