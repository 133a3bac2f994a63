// Benchmark comparing the OpenMP kernels against their serial references.

#include <omp.h>

#include <cstdio>

#include "horotree/inversion.hpp"
#include "horotree/io.hpp"

using namespace horo;

namespace {

template <class F>
double time_best(F&& body, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        double t0 = omp_get_wtime();
        body();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %9.3f ms %9.3f ms   x%.2f\n", name, serial * 1e3, parallel * 1e3,
                serial / parallel);
}

} // namespace

int main(int argc, char** argv) {
    int q = argc > 1 ? std::atoi(argv[1]) : 3;
    int R = argc > 2 ? std::atoi(argv[2]) : 5;
    int D = R + 1;
    std::printf("q=%d radius=%d depth=%d threads=%d\n", q, R, D, omp_get_max_threads());
    std::printf("%-28s %12s %12s\n", "kernel", "serial", "openmp");

    FnV f = random_fn_v(q, R, 42);
    FnE g = random_fn_e(q, R, 43);
    HoroFn F = radon_v(f, q, D);
    HoroFn G = radon_e(g, q, D + 1);

    row("radon_v", time_best([&] { radon_v_serial(f, q, D); }),
        time_best([&] { radon_v(f, q, D); }));
    row("radon_e", time_best([&] { radon_e_serial(g, q, D + 1); }),
        time_best([&] { radon_e(g, q, D + 1); }));

    auto pts = ball_vertices(q, 3);
    InvCoeffs d = inv_coeffs_v(1, 2 * R + 2, q);
    row("dual_radon_v (ball 3)",
        time_best([&] {
            for (auto& v : pts) dual_radon_v_serial(F, v);
        }),
        time_best([&] {
            for (auto& v : pts) dual_radon_v(F, v);
        }));
    row("invert_full_v (ball 3)",
        time_best([&] {
            for (auto& v : pts) invert_full_v_serial(F, v, d);
        }),
        time_best([&] { invert_full_v_batch(F, pts, d); }));

    auto epts = ball_edges(q, 3);
    InvCoeffs l = inv_coeffs_e(1, 2 * R + 2, q);
    row("invert_full_e (ball 3)",
        time_best([&] {
            for (auto& e : epts) invert_full_e_serial(G, e, l);
        }),
        time_best([&] { invert_full_e_batch(G, epts, l); }));
    return 0;
}
