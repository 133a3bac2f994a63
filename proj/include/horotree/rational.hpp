#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace horo {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int ipow(Int base, int e) {
    if (e < 0) throw error("ipow: negative exponent");
    Int r = 1;
    while (e-- > 0) r *= base;
    return r;
}

// q^e as an exact rational, e of either sign
inline Rat qpow(int q, int e) {
    if (e >= 0) return Rat(ipow(q, e));
    return Rat(Int(1), ipow(q, -e));
}

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

std::string rat_str(const Rat& r);
Rat rat_parse(const std::string& s);

} // namespace horo
