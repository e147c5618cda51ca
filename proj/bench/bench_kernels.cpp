// Timing comparison of the serial reference kernels against the OpenMP
// versions, plus an end-to-end solve. Build-only; run by hand:
//
//   ./build/bench/bench_kernels [n]       default n = 128
//
// The parallel kernels are required to produce bit-identical results to the
// serial ones (the unit tests enforce it), so this table is purely about
// speed.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "regpois/cg.hpp"
#include "regpois/experiment.hpp"
#include "regpois/kernels.hpp"
#include "regpois/operator.hpp"

using namespace regpois;

namespace {

template <typename F> double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 128;
    if (n < 8) {
        std::fprintf(stderr, "grid size must be at least 8\n");
        return 64;
    }

#ifdef _OPENMP
    std::printf("n = %d (%d threads)\n", n, omp_get_max_threads());
#else
    std::printf("n = %d (OpenMP disabled at build time)\n", n);
#endif

    const TanhSphericalDielectric d = make_dielectric(ExperimentConfig{});
    const Grid g = make_experiment_grid(n);
    const VariableCoefficientOperator A = build_operator(g, d);
    const std::int64_t len = g.node_count();

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> u(len), out(len);
    for (double& v : u) v = unif(rng);

    const double t_apply_s = time_best_of(5, [&] {
        kernels::apply_stencil_serial(n, g.spacing, A.fx.data(), A.fy.data(), A.fz.data(),
                                      u.data(), out.data());
    });
    const double t_apply_p = time_best_of(5, [&] {
        kernels::apply_stencil(n, g.spacing, A.fx.data(), A.fy.data(), A.fz.data(), u.data(),
                               out.data());
    });

    const double t_dot_s = time_best_of(5, [&] {
        volatile double sink = kernels::dot_serial(u.data(), out.data(), len);
        (void)sink;
    });
    const double t_dot_p = time_best_of(5, [&] {
        volatile double sink = kernels::dot(u.data(), out.data(), len);
        (void)sink;
    });

    std::printf("%-16s %12s %12s %8s\n", "kernel", "serial [s]", "parallel [s]", "speedup");
    std::printf("%-16s %12.6f %12.6f %8.2f\n", "apply_stencil", t_apply_s, t_apply_p,
                t_apply_s / t_apply_p);
    std::printf("%-16s %12.6f %12.6f %8.2f\n", "dot", t_dot_s, t_dot_p, t_dot_s / t_dot_p);

    // end-to-end: a few CG iterations on the benchmark system
    ExperimentConfig cfg;
    SolverConfig sc;
    sc.max_iterations = 40;
    sc.rel_tolerance = 1e-30; // never reached: times exactly 40 iterations
    LinearSystem sys = assemble_regularized(g, d, cfg.charges);
    const auto t0 = std::chrono::steady_clock::now();
    auto [x, report] = solve(sys, sc);
    const auto t1 = std::chrono::steady_clock::now();
    const double t_solve = std::chrono::duration<double>(t1 - t0).count();
    std::printf("%d preconditioned CG iterations: %.3f s (%.4f s/iter, reached rel %.2e)\n",
                report.iterations, t_solve, t_solve / report.iterations,
                report.final_relative_residual);
    return 0;
}
