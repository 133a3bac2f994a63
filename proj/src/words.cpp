#include "horotree/words.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace horo {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw error("rat_parse: zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw error("rat_parse: bad rational '" + s + "'");
    }
}

bool is_reduced(const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) return false;
    return true;
}

Word word_mul(const Word& a, const Word& b) {
    Word r = a;
    for (int x : b) {
        if (!r.empty() && r.back() == x)
            r.pop_back();
        else
            r.push_back(x);
    }
    return r;
}

Word word_inv(const Word& a) {
    Word r(a.rbegin(), a.rend());
    return r;
}

int common_prefix(const Word& a, const Word& b) {
    size_t n = std::min(a.size(), b.size());
    size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return int(i);
}

int dist_v(const Word& u, const Word& v) {
    return int(u.size()) + int(v.size()) - 2 * common_prefix(u, v);
}

Word join3(const Word& u, const Word& v, const Word& w) {
    Word wu = word_mul(word_inv(w), u);
    Word wv = word_mul(word_inv(w), v);
    int p = common_prefix(wu, wv);
    Word j(wu.begin(), wu.begin() + p);
    return word_mul(w, j);
}

std::vector<Word> geodesic(const Word& u, const Word& v) {
    int p = common_prefix(u, v);
    std::vector<Word> path;
    for (int i = int(u.size()); i >= p; --i) path.emplace_back(u.begin(), u.begin() + i);
    for (int i = p + 1; i <= int(v.size()); ++i) path.emplace_back(v.begin(), v.begin() + i);
    return path;
}

Edge::Edge(Word b, int l) : base(std::move(b)), letter(l) {
    if (!base.empty() && base.back() == letter)
        throw error("Edge: base.letter must be reduced");
    if (!is_reduced(base)) throw error("Edge: base not reduced");
}

Word Edge::far() const {
    Word w = base;
    w.push_back(letter);
    return w;
}

Edge edge_between(const Word& u, const Word& v) {
    if (dist_v(u, v) != 1) throw error("edge_between: vertices not adjacent");
    const Word& shorter = u.size() < v.size() ? u : v;
    const Word& longer = u.size() < v.size() ? v : u;
    return Edge(shorter, longer.back());
}

int dist_e(const Edge& a, const Edge& b) {
    if (a == b) return 0;
    int m = dist_v(a.near(), b.near());
    m = std::min(m, dist_v(a.near(), b.far()));
    m = std::min(m, dist_v(a.far(), b.near()));
    m = std::min(m, dist_v(a.far(), b.far()));
    return 1 + m;
}

int edge_norm(const Edge& e) { return dist_e(e, reference_edge()); }

int dist_ve_twice(const Word& v, const Edge& e) {
    return 1 + 2 * std::min(dist_v(v, e.near()), dist_v(v, e.far()));
}

Rat dist_f(const Flag& a, const Flag& b, const Rat& xi) {
    if (xi <= 0 || xi >= Rat(1, 4)) throw error("dist_f: xi must lie in (0, 1/4)");
    Rat dv(dist_v(a.vertex(), b.vertex()));
    Rat de(dist_e(a.edge, b.edge));
    return (1 - 2 * xi) * dv + 2 * xi * de;
}

std::vector<Word> neighbors(const Word& v, int q) {
    if (!is_reduced(v)) throw error("neighbors: word not reduced");
    std::vector<Word> out;
    out.reserve(size_t(q) + 1);
    if (!v.empty()) out.emplace_back(v.begin(), v.end() - 1);
    for (int a = 0; a <= q; ++a) {
        if (!v.empty() && v.back() == a) continue;
        Word w = v;
        w.push_back(a);
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> circle_vertices(int q, int n) {
    std::vector<Word> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    Word w;
    // lexicographic depth-first enumeration of reduced words of length n
    std::function<void()> rec = [&]() {
        if (int(w.size()) == n) {
            out.push_back(w);
            return;
        }
        for (int a = 0; a <= q; ++a) {
            if (!w.empty() && w.back() == a) continue;
            w.push_back(a);
            rec();
            w.pop_back();
        }
    };
    rec();
    return out;
}

std::vector<Word> ball_vertices(int q, int R) {
    std::vector<Word> out;
    for (int n = 0; n <= R; ++n) {
        auto c = circle_vertices(q, n);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

std::vector<Edge> circle_edges(int q, int n) {
    std::vector<Edge> out;
    if (n == 0) {
        out.push_back(reference_edge());
        return out;
    }
    // an edge at distance n has base length n-1 or n
    for (int len : {n - 1, n}) {
        for (const Word& b : circle_vertices(q, len)) {
            for (int a = 0; a <= q; ++a) {
                if (!b.empty() && b.back() == a) continue;
                Edge e(b, a);
                if (edge_norm(e) == n) out.push_back(std::move(e));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> ball_edges(int q, int R) {
    std::vector<Edge> out;
    for (int n = 0; n <= R; ++n) {
        auto c = circle_edges(q, n);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

std::vector<Flag> ball_flags(int q, int R) {
    std::vector<Flag> out;
    for (const Edge& e : ball_edges(q, R)) {
        out.emplace_back(e, false);
        out.emplace_back(e, true);
    }
    return out;
}

std::vector<Word> circle_vertices(const TreeParams& params, int n) {
    if (n > params.radius) throw error("circle_vertices: n exceeds the truncation radius");
    return circle_vertices(params.q, n);
}

std::vector<Edge> circle_edges(const TreeParams& params, int n) {
    if (n > params.radius) throw error("circle_edges: n exceeds the truncation radius");
    return circle_edges(params.q, n);
}

std::vector<Word> ball_vertices(const TreeParams& params) {
    return ball_vertices(params.q, params.radius);
}

std::string word_str(const Word& w, int q) {
    std::ostringstream os;
    bool dotted = q >= 10;
    for (size_t i = 0; i < w.size(); ++i) {
        if (dotted && i > 0) os << '.';
        os << w[i];
    }
    return os.str();
}

Word word_parse(const std::string& s, int q) {
    Word w;
    if (q >= 10) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, '.'))
            if (!tok.empty()) w.push_back(std::stoi(tok));
    } else {
        for (char c : s) {
            if (c < '0' || c > '9') throw error("word_parse: bad letter");
            w.push_back(c - '0');
        }
    }
    for (int a : w)
        if (a < 0 || a > q) throw error("word_parse: letter out of range");
    if (!is_reduced(w)) throw error("word_parse: word not reduced");
    return w;
}

std::string edge_str(const Edge& e, int q) {
    return word_str(e.base, q) + "+" + std::to_string(e.letter);
}

Edge edge_parse(const std::string& s, int q) {
    auto plus = s.rfind('+');
    if (plus == std::string::npos) throw error("edge_parse: missing '+'");
    return Edge(word_parse(s.substr(0, plus), q), std::stoi(s.substr(plus + 1)));
}

std::string flag_str(const Flag& f, int q) {
    return edge_str(f.edge, q) + "@" + (f.far ? "1" : "0");
}

Flag flag_parse(const std::string& s, int q) {
    auto at = s.rfind('@');
    if (at == std::string::npos) throw error("flag_parse: missing '@'");
    return Flag(edge_parse(s.substr(0, at), q), s.substr(at + 1) == "1");
}

} // namespace horo
