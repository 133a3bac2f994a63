#include "horotree/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <ostream>
#include <random>

namespace horo {

using nlohmann::json;

namespace {

json fn_header(const char* kind, int q) {
    json j;
    j["kind"] = kind;
    j["q"] = q;
    j["values"] = json::object();
    return j;
}

} // namespace

std::string fn_v_to_json(const FnV& f, int q) {
    json j = fn_header("vertex", q);
    for (auto& [w, val] : f) j["values"][word_str(w, q)] = rat_str(val);
    return j.dump(2);
}

std::string fn_e_to_json(const FnE& f, int q) {
    json j = fn_header("edge", q);
    for (auto& [e, val] : f) j["values"][edge_str(e, q)] = rat_str(val);
    return j.dump(2);
}

FnV fn_v_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("kind") != "vertex") throw error("fn_v_from_json: kind mismatch");
    int q = j.at("q").get<int>();
    FnV f;
    for (auto& [k, v] : j.at("values").items())
        f[word_parse(k, q)] = rat_parse(v.get<std::string>());
    return f;
}

FnE fn_e_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("kind") != "edge") throw error("fn_e_from_json: kind mismatch");
    int q = j.at("q").get<int>();
    FnE f;
    for (auto& [k, v] : j.at("values").items())
        f[edge_parse(k, q)] = rat_parse(v.get<std::string>());
    return f;
}

void write_horofn_csv(std::ostream& os, const HoroFn& F) {
    os << "arc,n,value\n";
    auto arcs = circle_vertices(F.q, F.depth);
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a)
        for (int n = F.nmin; n <= F.nmax; ++n) {
            const Rat& v = F.at(a, n);
            if (v == 0) continue;
            os << word_str(arcs[size_t(a)], F.q) << ',' << n << ',' << rat_str(v) << '\n';
        }
}

void write_horofn_f_csv(std::ostream& os, const HoroFnF& F) {
    os << "arc,nE,nV,value\n";
    auto arcs = circle_vertices(F.q, F.depth);
    for (std::int64_t a = 0; a < std::int64_t(arcs.size()); ++a)
        for (int ne = F.eNmin; ne <= F.eNmax; ++ne)
            for (int nv = F.vNmin; nv <= F.vNmax; ++nv) {
                const Rat& v = F.at(a, ne, nv);
                if (v == 0) continue;
                os << word_str(arcs[size_t(a)], F.q) << ',' << ne << ',' << nv << ','
                   << rat_str(v) << '\n';
            }
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    return Rat(num(rng), den(rng));
}

} // namespace

FnV random_fn_v(int q, int R, unsigned seed) {
    std::mt19937_64 rng(seed);
    FnV f;
    for (auto& v : ball_vertices(q, R)) {
        Rat r = random_rat(rng);
        if (r != 0) f[v] = r;
    }
    return f;
}

FnE random_fn_e(int q, int R, unsigned seed) {
    std::mt19937_64 rng(seed);
    FnE f;
    for (auto& e : ball_edges(q, R)) {
        Rat r = random_rat(rng);
        if (r != 0) f[e] = r;
    }
    return f;
}

FnF random_fn_f(int q, int R, unsigned seed) {
    std::mt19937_64 rng(seed);
    FnF f;
    for (auto& fl : ball_flags(q, R)) {
        Rat r = random_rat(rng);
        if (r != 0) f[fl] = r;
    }
    return f;
}

} // namespace horo
