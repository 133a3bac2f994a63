#pragma once

#include <complex>
#include <functional>

#include "horospheres.hpp"

namespace horo {

using Cpx = std::complex<double>;

struct degenerate_error : error {
    using error::error;
};
struct pole_error : error {
    using error::error;
};

Cpx qz(int q, Cpx z); // q^z

// eigenvalue maps and the exponential-splitting coefficients
Cpx gamma_v(int q, Cpx z); // (q^z + q^{1-z})/(q+1)
Cpx gamma_e(int q, Cpx z); // (q^z + q-1 + q^{1-z})/(2q)
bool is_degenerate(int q, Cpx z, double tol = 1e-12); // q^{2z-1} == 1
Cpx c_coeff(int q, Cpx z); // throws degenerate_error at q^{2z-1} = 1
Cpx d_coeff(int q, Cpx z);

// spherical functions phi_z(n); degenerate branch selected automatically,
// or forced with branch = +1 (degenerate) / -1 (generic)
Cpx spherical_v(int q, Cpx z, int n, int branch = 0);
Cpx spherical_e(int q, Cpx z, int n, int branch = 0);

// stable critical-line forms at z = 1/2 + it
double spherical_crit_v(int q, double t, int n);
double spherical_crit_e(int q, double t, int n);

struct RadialSeq {
    Simplex kind = Simplex::vertex;
    std::vector<Rat> v; // index = radius
};

std::int64_t circle_size_v(int q, int n);
std::int64_t circle_size_e(int q, int n);

Cpx spherical_ft_radial(const RadialSeq& h, int q, Cpx z);
Cpx spherical_ft_zonal(const FnV& f, int q, Cpx z); // radializes first
Cpx spherical_ft_at_ray(const FnV& f, int q, Cpx z, const Word& ray);

// F^Z g(z) = sum_n g_n q^{nz} and its inverse on the line Re z = x
Cpx fourier_series(const std::map<int, Cpx>& g, int q, Cpx z);
Cpx fourier_coeff(const std::function<Cpx(Cpx)>& u, int n, double x, int q, int N);

// word-group convolution and the averaging operators
FnV convolve_v(const FnV& f, const FnV& g);
Rat mu1_at(const FnV& f, const Word& v, int q);
Rat eta1_at(const FnE& f, const Edge& e, int q);
// radial convolution on edges (distance-based; E is not a group)
RadialSeq radial_convolve_e(const RadialSeq& f, const RadialSeq& g, int q, int Rout);
RadialSeq radial_convolve_v(const RadialSeq& f, const RadialSeq& g, int q, int Rout);

Edge representative_edge(int n); // canonical edge at distance n from e0

// max over the ball interior of |L phi_z - gamma(z) phi_z|
double eigen_residual(int q, Cpx z, Simplex kind, int R);

struct QuadratureGrid {
    int N; // composite Simpson on [0, pi/ln q]; N even, >= 8
    explicit QuadratureGrid(int N_) : N(N_) {
        if (N < 8 || N % 2 != 0) throw error("QuadratureGrid: N must be even and >= 8");
    }
};

// Plancherel densities on the critical line (vanish at the endpoints)
double plancherel_density_v(int q, double t); // |c(1/2+it)|^{-2}
double plancherel_density_e(int q, double t); // |d(1/2+it)|^{-2}
// normalizations validated by the delta-normalization oracle
double plancherel_const_v(int q); // q ln q / (2 pi (q+1))
double plancherel_const_e(int q); // ln q / (4 pi)

// eta_1 has the ell^2 point eigenvalue -1/q (divergence-free edge flows) with
// radial eigenfunction (-1/q)^{|e|}; the radial edge Plancherel measure is
// the |d|^{-2} density plus an atom there of mass (q-1)/(q+1).
double edge_atom_gamma(int q);           // -1/q
double edge_atom_mass(int q);            // (q-1)/(q+1)
double edge_atom_profile(int q, int n);  // (-1/q)^n
double ft_edge_atom(const RadialSeq& h, int q);

double plancherel_norm2_v(const RadialSeq& h, int q, const QuadratureGrid& grid);
double plancherel_norm2_e(const RadialSeq& h, int q, const QuadratureGrid& grid);
double spherical_inversion_v(const RadialSeq& h, int n, int q, const QuadratureGrid& grid);
double spherical_inversion_e(const RadialSeq& h, int n, int q, const QuadratureGrid& grid);
double norm2_direct(const RadialSeq& h, int q); // exact circle-weighted sum

// resolvents of mu_1 and eta_1 (Re z > 1/2)
Cpx resolvent_s(int q, Cpx z, int n);
Cpx resolvent_r(int q, Cpx z, int n);
double resolvent_residual(int q, Cpx z, Simplex kind, int R);

// back-projection kernels Psi = R* R delta and their spherical symbols
Rat psi_closed_v(int q, int n);
Rat psi_closed_e(int q, int n);
Cpx symbol_psi_hat_v(int q, Cpx w); // throws pole_error at the spectrum endpoints
Cpx symbol_psi_hat_e(int q, Cpx w);
double symbol_psi_hat_v_crit(int q, double t); // (2/(q+1))(1 + (q-1)^2/(4q sin^2))
double symbol_psi_hat_e_crit(int q, double t); // 1 + (q-1)^2/(4q sin^2(t ln q))

// numerical inverse-blur kernel Phi (spherical inversion of 1/Psi-hat).
// Psi-hat^E vanishes at the atom, so Phi * Psi^E converges to the identity
// minus the atom projection, never to delta itself: the `_range` residual
// measures the distance to that attainable target, the plain one to delta.
double blur_inverse_phi(int n, int q, const QuadratureGrid& grid);
double blur_roundtrip_residual(int R, int q, const QuadratureGrid& grid);
double blur_roundtrip_residual_range(int R, int q, const QuadratureGrid& grid);
// vertex analogue: Psi-hat^V is bounded away from zero, so the vertex
// roundtrip does converge to delta
double blur_inverse_phi_v(int n, int q, const QuadratureGrid& grid);
double blur_roundtrip_residual_v(int R, int q, const QuadratureGrid& grid);

// P_z F(v) = sum_arcs F(arc) q^{sign z h_arc(v)} nu(arc); sign +1 matches the
// zonal convention (P_z 1 = phi_z, eigenvalue gamma^V(z))
Cpx poisson_transform(const std::vector<Cpx>& arcvals, int q, int depth, Cpx z, const Word& v,
                      int sign = +1);

double schwartz_seminorm(const FnV& f, double r, int q);
std::vector<Cpx> spectrum_sample(double p, int nsamples, int q, Simplex kind);

// three-term recurrence evaluations P_n, Q_n with P_n(gamma(z)) = phi_z(n)
Cpx spherical_polynomial_v(int n, Cpx gamma, int q);
Cpx spherical_polynomial_e(int n, Cpx gamma, int q);

double simpson(const std::function<double(double)>& f, double a, double b, int N);
Cpx simpson_cpx(const std::function<Cpx(double)>& f, double a, double b, int N);

} // namespace horo
