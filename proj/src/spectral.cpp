#include "horotree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace horo {

namespace {
constexpr double kPi = std::numbers::pi;
double lnq_of(int q) { return std::log(double(q)); }
} // namespace

Cpx qz(int q, Cpx z) { return std::exp(z * lnq_of(q)); }

Cpx gamma_v(int q, Cpx z) { return (qz(q, z) + qz(q, 1.0 - z)) / double(q + 1); }

Cpx gamma_e(int q, Cpx z) { return (qz(q, z) + double(q - 1) + qz(q, 1.0 - z)) / double(2 * q); }

bool is_degenerate(int q, Cpx z, double tol) {
    return std::abs(qz(q, 2.0 * z - 1.0) - 1.0) < tol;
}

Cpx c_coeff(int q, Cpx z) {
    if (is_degenerate(q, z)) throw degenerate_error("c_coeff: q^(2z-1) = 1");
    return (qz(q, 1.0 - z) - qz(q, z - 1.0)) / (qz(q, -z) - qz(q, z - 1.0)) / double(q + 1);
}

Cpx d_coeff(int q, Cpx z) {
    if (is_degenerate(q, z)) throw degenerate_error("d_coeff: q^(2z-1) = 1");
    return 0.5 * (double(q - 1) + qz(q, 1.0 - z) - qz(q, z)) / (qz(q, 1.0 - z) - qz(q, z));
}

namespace {
// q^(2z-1) = 1 at z = 1/2 + i k pi / ln q; recover the branch integer k
int degenerate_k(int q, Cpx z) { return int(std::lround(z.imag() * lnq_of(q) / kPi)); }
} // namespace

Cpx spherical_v(int q, Cpx z, int n, int branch) {
    if (n < 0) throw error("spherical_v: n must be >= 0");
    bool degen = branch == 0 ? is_degenerate(q, z) : branch > 0;
    if (degen) {
        double a = double(q - 1) / double(q + 1);
        return (1.0 + a * n) * qz(q, -z * double(n));
    }
    return c_coeff(q, z) * qz(q, -z * double(n)) +
           c_coeff(q, 1.0 - z) * qz(q, -(1.0 - z) * double(n));
}

Cpx spherical_e(int q, Cpx z, int n, int branch) {
    if (n < 0) throw error("spherical_e: n must be >= 0");
    bool degen = branch == 0 ? is_degenerate(q, z) : branch > 0;
    if (degen) {
        // the linear coefficient flips sign with the branch parity
        double b = double(q - 1) / (2.0 * std::sqrt(double(q)));
        double sign = degenerate_k(q, z) % 2 == 0 ? 1.0 : -1.0;
        return (1.0 + sign * b * n) * qz(q, -z * double(n));
    }
    return d_coeff(q, z) * qz(q, -z * double(n)) +
           d_coeff(q, 1.0 - z) * qz(q, -(1.0 - z) * double(n));
}

double spherical_crit_v(int q, double t, int n) {
    double th = t * lnq_of(q);
    double scale = std::pow(double(q), -0.5 * n);
    double s = std::sin(th);
    if (std::abs(s) < 1e-14) {
        double a = double(q - 1) / double(q + 1);
        double par = std::cos(th) >= 0 ? 1.0 : (n % 2 == 0 ? 1.0 : -1.0);
        return scale * par * (1.0 + a * n);
    }
    return scale * (std::cos(n * th) + double(q - 1) * std::cos(th) * std::sin(n * th) /
                                           (double(q + 1) * s));
}

double spherical_crit_e(int q, double t, int n) {
    double th = t * lnq_of(q);
    double scale = std::pow(double(q), -0.5 * n);
    double s = std::sin(th);
    double b = double(q - 1) / (2.0 * std::sqrt(double(q)));
    if (std::abs(s) < 1e-14) {
        bool at_pi = std::cos(th) < 0;
        double par = at_pi ? (n % 2 == 0 ? 1.0 : -1.0) : 1.0;
        double sign = at_pi ? -1.0 : 1.0;
        return scale * par * (1.0 + sign * b * n);
    }
    return scale * (std::cos(n * th) + b * std::sin(n * th) / s);
}

std::int64_t circle_size_v(int q, int n) {
    if (n == 0) return 1;
    std::int64_t c = q + 1;
    for (int i = 1; i < n; ++i) c *= q;
    return c;
}

std::int64_t circle_size_e(int q, int n) {
    if (n == 0) return 1;
    std::int64_t c = 2;
    for (int i = 0; i < n; ++i) c *= q;
    return c;
}

Cpx spherical_ft_radial(const RadialSeq& h, int q, Cpx z) {
    Cpx s = 0.0;
    for (int n = 0; n < int(h.v.size()); ++n) {
        if (h.v[size_t(n)] == 0) continue;
        std::int64_t cnt =
            h.kind == Simplex::vertex ? circle_size_v(q, n) : circle_size_e(q, n);
        Cpx phi = h.kind == Simplex::vertex ? spherical_v(q, z, n) : spherical_e(q, z, n);
        s += double(cnt) * to_double(h.v[size_t(n)]) * phi;
    }
    return s;
}

Cpx spherical_ft_zonal(const FnV& f, int q, Cpx z) {
    int R = 0;
    for (auto& [w, val] : f) R = std::max(R, int(w.size()));
    RadialSeq h{Simplex::vertex, radialize_v(f, R, q)};
    return spherical_ft_radial(h, q, z);
}

Cpx spherical_ft_at_ray(const FnV& f, int q, Cpx z, const Word& ray) {
    Cpx s = 0.0;
    for (auto& [v, val] : f) s += to_double(val) * qz(q, z * double(h_index_v(v, ray)));
    return s;
}

Cpx fourier_series(const std::map<int, Cpx>& g, int q, Cpx z) {
    Cpx s = 0.0;
    for (auto& [n, gn] : g) s += gn * qz(q, z * double(n));
    return s;
}

Cpx fourier_coeff(const std::function<Cpx(Cpx)>& u, int n, double x, int q, int N) {
    double L = kPi / lnq_of(q);
    auto f = [&](double t) {
        Cpx z(x, t);
        return u(z) * qz(q, -double(n) * z);
    };
    return lnq_of(q) / (2.0 * kPi) * simpson_cpx(f, -L, L, N);
}

FnV convolve_v(const FnV& f, const FnV& g) {
    FnV out;
    for (auto& [w, fw] : f)
        for (auto& [u, gu] : g) {
            Rat prod = fw * gu;
            if (prod != 0) out[word_mul(w, u)] += prod;
        }
    return out;
}

Rat mu1_at(const FnV& f, const Word& v, int q) {
    Rat s(0);
    for (auto& w : neighbors(v, q)) {
        auto it = f.find(w);
        if (it != f.end()) s += it->second;
    }
    return s / Rat(q + 1);
}

Rat eta1_at(const FnE& f, const Edge& e, int q) {
    Rat s(0);
    for (const Word& w : {e.near(), e.far()})
        for (auto& u : neighbors(w, q)) {
            Edge n = edge_between(w, u);
            if (n == e) continue;
            auto it = f.find(n);
            if (it != f.end()) s += it->second;
        }
    return s / Rat(2 * q);
}

Edge representative_edge(int n) {
    if (n == 0) return reference_edge();
    Word base;
    for (int i = 0; i < n; ++i) base.push_back(i % 2);
    return Edge(base, n % 2);
}

namespace {
Word representative_vertex(int n) {
    Word w;
    for (int i = 0; i < n; ++i) w.push_back(i % 2);
    return w;
}
} // namespace

RadialSeq radial_convolve_v(const RadialSeq& f, const RadialSeq& g, int q, int Rout) {
    if (f.kind != Simplex::vertex || g.kind != Simplex::vertex)
        throw error("radial_convolve_v: vertex sequences required");
    int Rf = int(f.v.size()) - 1;
    auto gval = [&](int m) { return m < int(g.v.size()) ? g.v[size_t(m)] : Rat(0); };
    RadialSeq out{Simplex::vertex, std::vector<Rat>(size_t(Rout) + 1, Rat(0))};
    auto ball = ball_vertices(q, Rf);
    for (int n = 0; n <= Rout; ++n) {
        Word v = representative_vertex(n);
        Rat s(0);
        for (auto& w : ball) s += f.v[w.size()] * gval(dist_v(w, v));
        out.v[size_t(n)] = s;
    }
    return out;
}

RadialSeq radial_convolve_e(const RadialSeq& f, const RadialSeq& g, int q, int Rout) {
    if (f.kind != Simplex::edge || g.kind != Simplex::edge)
        throw error("radial_convolve_e: edge sequences required");
    int Rf = int(f.v.size()) - 1;
    auto gval = [&](int m) { return m < int(g.v.size()) ? g.v[size_t(m)] : Rat(0); };
    RadialSeq out{Simplex::edge, std::vector<Rat>(size_t(Rout) + 1, Rat(0))};
    auto ball = ball_edges(q, Rf);
    for (int n = 0; n <= Rout; ++n) {
        Edge e = representative_edge(n);
        Rat s(0);
        for (auto& ep : ball) s += f.v[size_t(edge_norm(ep))] * gval(dist_e(ep, e));
        out.v[size_t(n)] = s;
    }
    return out;
}

double eigen_residual(int q, Cpx z, Simplex kind, int R) {
    double worst = 0.0;
    if (kind == Simplex::vertex) {
        Cpx g = gamma_v(q, z);
        std::vector<Cpx> phi(size_t(R) + 1);
        for (int n = 0; n <= R; ++n) phi[size_t(n)] = spherical_v(q, z, n);
        worst = std::abs(phi[1] - g * phi[0]);
        for (int n = 1; n <= R - 1; ++n) {
            Cpx lap = (phi[size_t(n - 1)] + double(q) * phi[size_t(n + 1)]) / double(q + 1);
            worst = std::max(worst, std::abs(lap - g * phi[size_t(n)]));
        }
    } else {
        Cpx g = gamma_e(q, z);
        std::vector<Cpx> psi(size_t(R) + 1);
        for (int n = 0; n <= R; ++n) psi[size_t(n)] = spherical_e(q, z, n);
        worst = std::abs(psi[1] - g * psi[0]);
        for (int n = 1; n <= R - 1; ++n) {
            Cpx lap = (psi[size_t(n - 1)] + double(q - 1) * psi[size_t(n)] +
                       double(q) * psi[size_t(n + 1)]) /
                      double(2 * q);
            worst = std::max(worst, std::abs(lap - g * psi[size_t(n)]));
        }
    }
    return worst;
}

double plancherel_density_v(int q, double t) {
    double th = t * lnq_of(q);
    double s2 = std::sin(th) * std::sin(th), c2 = std::cos(th) * std::cos(th);
    double A = double(q + 1) * (q + 1), B = double(q - 1) * (q - 1);
    return 4.0 * A * s2 / (A * s2 + B * c2);
}

double plancherel_density_e(int q, double t) {
    double th = t * lnq_of(q);
    double s2 = std::sin(th) * std::sin(th);
    return 16.0 * q * s2 / (4.0 * q * s2 + double(q - 1) * (q - 1));
}

double plancherel_const_v(int q) { return double(q) * lnq_of(q) / (2.0 * kPi * (q + 1)); }

double plancherel_const_e(int q) { return lnq_of(q) / (4.0 * kPi); }

double edge_atom_gamma(int q) { return -1.0 / q; }

double edge_atom_mass(int q) { return double(q - 1) / (q + 1); }

double edge_atom_profile(int q, int n) { return std::pow(-1.0 / q, n); }

double ft_edge_atom(const RadialSeq& h, int q) {
    if (h.kind != Simplex::edge) throw error("ft_edge_atom: edge sequence required");
    double s = 0.0;
    for (int n = 0; n < int(h.v.size()); ++n)
        s += double(circle_size_e(q, n)) * to_double(h.v[size_t(n)]) * edge_atom_profile(q, n);
    return s;
}

namespace {

double ft_crit(const RadialSeq& h, int q, double t) {
    double s = 0.0;
    for (int n = 0; n < int(h.v.size()); ++n) {
        if (h.v[size_t(n)] == 0) continue;
        std::int64_t cnt =
            h.kind == Simplex::vertex ? circle_size_v(q, n) : circle_size_e(q, n);
        double phi =
            h.kind == Simplex::vertex ? spherical_crit_v(q, t, n) : spherical_crit_e(q, t, n);
        s += double(cnt) * to_double(h.v[size_t(n)]) * phi;
    }
    return s;
}

} // namespace

double plancherel_norm2_v(const RadialSeq& h, int q, const QuadratureGrid& grid) {
    if (h.kind != Simplex::vertex) throw error("plancherel_norm2_v: vertex sequence required");
    double L = kPi / lnq_of(q);
    auto f = [&](double t) {
        double v = ft_crit(h, q, t);
        return v * v * plancherel_density_v(q, t);
    };
    return plancherel_const_v(q) * simpson(f, 0.0, L, grid.N);
}

double plancherel_norm2_e(const RadialSeq& h, int q, const QuadratureGrid& grid) {
    if (h.kind != Simplex::edge) throw error("plancherel_norm2_e: edge sequence required");
    double L = kPi / lnq_of(q);
    auto f = [&](double t) {
        double v = ft_crit(h, q, t);
        return v * v * plancherel_density_e(q, t);
    };
    double atom = ft_edge_atom(h, q);
    return plancherel_const_e(q) * simpson(f, 0.0, L, grid.N) + edge_atom_mass(q) * atom * atom;
}

double spherical_inversion_v(const RadialSeq& h, int n, int q, const QuadratureGrid& grid) {
    if (h.kind != Simplex::vertex) throw error("spherical_inversion_v: vertex sequence required");
    double L = kPi / lnq_of(q);
    auto f = [&](double t) {
        return ft_crit(h, q, t) * spherical_crit_v(q, t, n) * plancherel_density_v(q, t);
    };
    return plancherel_const_v(q) * simpson(f, 0.0, L, grid.N);
}

double spherical_inversion_e(const RadialSeq& h, int n, int q, const QuadratureGrid& grid) {
    if (h.kind != Simplex::edge) throw error("spherical_inversion_e: edge sequence required");
    double L = kPi / lnq_of(q);
    auto f = [&](double t) {
        return ft_crit(h, q, t) * spherical_crit_e(q, t, n) * plancherel_density_e(q, t);
    };
    return plancherel_const_e(q) * simpson(f, 0.0, L, grid.N) +
           edge_atom_mass(q) * ft_edge_atom(h, q) * edge_atom_profile(q, n);
}

double norm2_direct(const RadialSeq& h, int q) {
    double s = 0.0;
    for (int n = 0; n < int(h.v.size()); ++n) {
        std::int64_t cnt =
            h.kind == Simplex::vertex ? circle_size_v(q, n) : circle_size_e(q, n);
        double v = to_double(h.v[size_t(n)]);
        s += double(cnt) * v * v;
    }
    return s;
}

Cpx resolvent_s(int q, Cpx z, int n) {
    if (z.real() <= 0.5) throw error("resolvent_s: requires Re z > 1/2 (not ell^2 otherwise)");
    return double(q + 1) / (qz(q, -z) - qz(q, z)) * qz(q, -z * double(n));
}

Cpx resolvent_r(int q, Cpx z, int n) {
    if (z.real() <= 0.5) throw error("resolvent_r: requires Re z > 1/2 (not ell^2 otherwise)");
    return 2.0 * double(q) / (qz(q, 1.0 - z) - qz(q, z) - double(q - 1)) * qz(q, -z * double(n));
}

double resolvent_residual(int q, Cpx z, Simplex kind, int R) {
    double worst = 0.0;
    if (kind == Simplex::vertex) {
        Cpx g = gamma_v(q, z);
        std::vector<Cpx> s(size_t(R) + 2);
        for (int n = 0; n <= R + 1; ++n) s[size_t(n)] = resolvent_s(q, z, n);
        worst = std::abs(s[1] - g * s[0] - 1.0); // (mu_1 - gamma) s = delta at v0
        for (int n = 1; n <= R; ++n) {
            Cpx lap = (s[size_t(n - 1)] + double(q) * s[size_t(n + 1)]) / double(q + 1);
            worst = std::max(worst, std::abs(lap - g * s[size_t(n)]));
        }
    } else {
        Cpx g = gamma_e(q, z);
        std::vector<Cpx> r(size_t(R) + 2);
        for (int n = 0; n <= R + 1; ++n) r[size_t(n)] = resolvent_r(q, z, n);
        worst = std::abs(r[1] - g * r[0] - 1.0);
        for (int n = 1; n <= R; ++n) {
            Cpx lap = (r[size_t(n - 1)] + double(q - 1) * r[size_t(n)] +
                       double(q) * r[size_t(n + 1)]) /
                      double(2 * q);
            worst = std::max(worst, std::abs(lap - g * r[size_t(n)]));
        }
    }
    return worst;
}

Rat psi_closed_v(int q, int n) {
    if (n < 0) throw error("psi_closed_v: n must be >= 0");
    if (n == 0) return Rat(1);
    if (n % 2 != 0) return Rat(0);
    return Rat(Int(q - 1), Int(q + 1) * ipow(q, n / 2));
}

Rat psi_closed_e(int q, int n) {
    if (n < 0) throw error("psi_closed_e: n must be >= 0");
    if (n == 0) return Rat(1);
    if (n % 2 == 0) return Rat(0);
    return Rat(Int(q - 1), Int(2) * ipow(q, (n + 1) / 2));
}

Cpx symbol_psi_hat_v(int q, Cpx w) {
    Cpx g = gamma_v(q, w);
    Cpx den = double(q + 1) * (q + 1) * g * g - 4.0 * q;
    if (std::abs(den) < 1e-12 * 4.0 * q) throw pole_error("symbol_psi_hat_v: spectrum endpoint");
    return 2.0 / double(q + 1) * (1.0 - double(q - 1) * (q - 1) / den);
}

Cpx symbol_psi_hat_e(int q, Cpx w) {
    Cpx G = gamma_e(q, w) - double(q - 1) / (2.0 * q);
    Cpx den = 4.0 * double(q) * q * G * G - 4.0 * q;
    if (std::abs(den) < 1e-12 * 4.0 * q) throw pole_error("symbol_psi_hat_e: spectrum endpoint");
    return 1.0 - double(q - 1) * (q - 1) / den;
}

double symbol_psi_hat_v_crit(int q, double t) {
    double th = t * lnq_of(q);
    double s2 = std::sin(th) * std::sin(th);
    if (s2 == 0.0) throw pole_error("symbol_psi_hat_v_crit: spectrum endpoint");
    return 2.0 / (q + 1) * (1.0 + double(q - 1) * (q - 1) / (4.0 * q * s2));
}

double symbol_psi_hat_e_crit(int q, double t) {
    double th = t * lnq_of(q);
    double s2 = std::sin(th) * std::sin(th);
    if (s2 == 0.0) throw pole_error("symbol_psi_hat_e_crit: spectrum endpoint");
    return 1.0 + double(q - 1) * (q - 1) / (4.0 * q * s2);
}

double blur_inverse_phi(int n, int q, const QuadratureGrid& grid) {
    double L = kPi / lnq_of(q);
    double B = double(q - 1) * (q - 1);
    auto f = [&](double t) {
        double th = t * lnq_of(q);
        double s2 = std::sin(th) * std::sin(th);
        double invpsi = 4.0 * q * s2 / (4.0 * q * s2 + B); // 1 / Psi-hat, vanishes at endpoints
        return invpsi * spherical_crit_e(q, t, n) * plancherel_density_e(q, t);
    };
    return plancherel_const_e(q) * simpson(f, 0.0, L, grid.N);
}

namespace {

double blur_roundtrip_worst(int R, int q, const QuadratureGrid& grid, bool range_target) {
    std::vector<double> phi(size_t(R) + 1);
    for (int m = 0; m <= R; ++m) phi[size_t(m)] = blur_inverse_phi(m, q, grid);
    auto ball = ball_edges(q, R);
    double worst = 0.0;
    for (int m = 0; m <= R / 2; ++m) {
        Edge e = representative_edge(m);
        double conv = 0.0;
        for (auto& ep : ball)
            conv += phi[size_t(edge_norm(ep))] * to_double(psi_closed_e(q, dist_e(ep, e)));
        double target = m == 0 ? 1.0 : 0.0;
        if (range_target) target -= edge_atom_mass(q) * edge_atom_profile(q, m);
        worst = std::max(worst, std::abs(conv - target));
    }
    return worst;
}

} // namespace

double blur_roundtrip_residual(int R, int q, const QuadratureGrid& grid) {
    return blur_roundtrip_worst(R, q, grid, false);
}

double blur_roundtrip_residual_range(int R, int q, const QuadratureGrid& grid) {
    return blur_roundtrip_worst(R, q, grid, true);
}

double blur_inverse_phi_v(int n, int q, const QuadratureGrid& grid) {
    double L = kPi / lnq_of(q);
    auto f = [&](double t) {
        double th = t * lnq_of(q);
        double s2 = std::sin(th) * std::sin(th);
        // 1 / Psi-hat^V on the critical line
        double invpsi = (q + 1) / 2.0 * 4.0 * q * s2 / (4.0 * q * s2 + double(q - 1) * (q - 1));
        return invpsi * spherical_crit_v(q, t, n) * plancherel_density_v(q, t);
    };
    return plancherel_const_v(q) * simpson(f, 0.0, L, grid.N);
}

double blur_roundtrip_residual_v(int R, int q, const QuadratureGrid& grid) {
    std::vector<double> phi(size_t(R) + 1);
    for (int m = 0; m <= R; ++m) phi[size_t(m)] = blur_inverse_phi_v(m, q, grid);
    auto ball = ball_vertices(q, R);
    double worst = 0.0;
    for (int m = 0; m <= R / 2; ++m) {
        Word v;
        for (int i = 0; i < m; ++i) v.push_back(i % 2);
        double conv = 0.0;
        for (auto& w : ball)
            conv += phi[w.size()] * to_double(psi_closed_v(q, dist_v(w, v)));
        worst = std::max(worst, std::abs(conv - (m == 0 ? 1.0 : 0.0)));
    }
    return worst;
}

Cpx poisson_transform(const std::vector<Cpx>& arcvals, int q, int depth, Cpx z, const Word& v,
                      int sign) {
    if (int(v.size()) > depth) throw error("poisson_transform: depth < |v|");
    auto arcs = circle_vertices(q, depth);
    if (arcvals.size() != arcs.size()) throw error("poisson_transform: arc count mismatch");
    double nu = to_double(arc_measure_v(Arc{arcs[0]}, q));
    Cpx s = 0.0;
    for (size_t a = 0; a < arcs.size(); ++a) {
        int h = h_index_v(v, arcs[a]);
        s += arcvals[a] * qz(q, double(sign) * z * double(h));
    }
    return s * nu;
}

double schwartz_seminorm(const FnV& f, double r, int q) {
    double best = 0.0;
    for (auto& [w, val] : f) {
        double n = double(w.size());
        double term = std::pow(1.0 + n, r) * std::abs(to_double(val)) *
                      std::pow(double(q), n / 2.0);
        best = std::max(best, term);
    }
    return best;
}

std::vector<Cpx> spectrum_sample(double p, int nsamples, int q, Simplex kind) {
    if (p <= 1.0 || p > 2.0) throw error("spectrum_sample: requires 1 < p <= 2");
    std::vector<Cpx> out;
    out.reserve(size_t(nsamples));
    double period = 2.0 * kPi / lnq_of(q);
    for (int k = 0; k < nsamples; ++k) {
        Cpx z(1.0 / p, period * k / nsamples);
        out.push_back(kind == Simplex::vertex ? gamma_v(q, z) : gamma_e(q, z));
    }
    return out;
}

Cpx spherical_polynomial_v(int n, Cpx gamma, int q) {
    if (n < 0) throw error("spherical_polynomial_v: n must be >= 0");
    Cpx p0 = 1.0, p1 = gamma;
    if (n == 0) return p0;
    for (int k = 1; k < n; ++k) {
        Cpx p2 = (double(q + 1) * gamma * p1 - p0) / double(q);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

Cpx spherical_polynomial_e(int n, Cpx gamma, int q) {
    if (n < 0) throw error("spherical_polynomial_e: n must be >= 0");
    Cpx p0 = 1.0, p1 = gamma;
    if (n == 0) return p0;
    for (int k = 1; k < n; ++k) {
        Cpx p2 = (2.0 * double(q) * gamma * p1 - double(q - 1) * p1 - p0) / double(q);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double simpson(const std::function<double(double)>& f, double a, double b, int N) {
    if (N < 2 || N % 2 != 0) throw error("simpson: N must be even and >= 2");
    double h = (b - a) / N;
    double s = f(a) + f(b);
    for (int i = 1; i < N; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

Cpx simpson_cpx(const std::function<Cpx(double)>& f, double a, double b, int N) {
    if (N < 2 || N % 2 != 0) throw error("simpson_cpx: N must be even and >= 2");
    double h = (b - a) / N;
    Cpx s = f(a) + f(b);
    for (int i = 1; i < N; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * (h / 3.0);
}

} // namespace horo
