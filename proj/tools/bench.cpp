// Throughput comparison of the OpenMP kernels against the serial reference
// implementations, on the acoustic leapfrog update and the elastic phases.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sofd/elastic2d.hpp"
#include "sofd/kernels.hpp"
#include "sofd/stencil.hpp"

using namespace sofd;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void fill_random(std::vector<double>& v, std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (double& x : v) x = d(rng);
}

void bench_acoustic(int n, int iters) {
    const Stencil st = optimized_collocated4();
    std::mt19937 rng(7);
    std::vector<double> curr(static_cast<std::size_t>(n)), prev(curr), next(curr);
    fill_random(curr, rng);
    fill_random(prev, rng);

    double best_serial = 1e30, best_parallel = 1e30;
    for (int rep = 0; rep < 3; ++rep) {
        auto t0 = clock_type::now();
        for (int i = 0; i < iters; ++i)
            ref::acoustic_leapfrog(curr, prev, st.offsets, st.coefficients, 0.04, next);
        best_serial = std::min(best_serial, seconds_since(t0));
        t0 = clock_type::now();
        for (int i = 0; i < iters; ++i)
            kernels::acoustic_leapfrog(curr, prev, st.offsets, st.coefficients, 0.04, next,
                                       kernels::Exec::parallel);
        best_parallel = std::min(best_parallel, seconds_since(t0));
    }
    const double mlups = 1e-6 * n * iters;
    std::printf("acoustic leapfrog  n=%-8d  serial %8.1f Mpts/s   openmp %8.1f Mpts/s   speedup %.2fx\n",
                n, mlups / best_serial, mlups / best_parallel, best_serial / best_parallel);
}

void bench_elastic(int nx, int steps) {
    ElasticConfig cfg;
    cfg.width = (nx - 1) * cfg.dx;
    cfg.depth = (nx - 1) * cfg.dz;
    cfg.layers = {{cfg.depth / 2, 1400.0, 0.0, 1000.0}, {cfg.depth / 2, 4000.0, 2400.0, 2600.0}};
    cfg.source.x = cfg.width / 2;
    const ElasticModel model = build_model(cfg);
    const DerivedMaterials mats = derive_materials(model);
    const StencilPair pair = staggered_pair("optimized");
    const double dt = cfg.dt();

    double best_serial = 1e30, best_parallel = 1e30;
    for (int rep = 0; rep < 3; ++rep) {
        StaggeredFields f = make_fields(model);
        auto t0 = clock_type::now();
        for (int s = 0; s < steps; ++s)
            step(f, model, mats, cfg.source, dt, pair, kernels::Exec::serial);
        best_serial = std::min(best_serial, seconds_since(t0));
        StaggeredFields g = make_fields(model);
        t0 = clock_type::now();
        for (int s = 0; s < steps; ++s)
            step(g, model, mats, cfg.source, dt, pair, kernels::Exec::parallel);
        best_parallel = std::min(best_parallel, seconds_since(t0));
    }
    const double mcells = 1e-6 * static_cast<double>(nx) * nx * steps;
    std::printf("elastic step       %dx%-5d  serial %8.1f Mcell/s  openmp %8.1f Mcell/s  speedup %.2fx\n",
                nx, nx, mcells / best_serial, mcells / best_parallel, best_serial / best_parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; 'openmp' columns run serially\n");
#endif
    bench_acoustic(1001, 20000);
    bench_acoustic(100001, 400);
    bench_elastic(201, 100);
    bench_elastic(601, 20);
    return 0;
}
