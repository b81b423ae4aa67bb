#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <utility>
#include <vector>

#include "sofd/kernels.hpp"
#include "sofd/stencil.hpp"

using namespace sofd;

namespace {

std::vector<double> random_vec(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = d(rng);
    return v;
}

Grid2 random_grid(int nx, int nz, std::mt19937& rng, bool positive = false) {
    std::uniform_real_distribution<double> d(positive ? 0.1 : -1.0, 1.0);
    Grid2 g(nx, nz);
    for (double& x : g.v) x = d(rng);
    return g;
}

}  // namespace

TEST_CASE("zero extension at the array ends, by hand") {
    const std::vector<double> u = {1.0, 2.0, 3.0, 4.0};
    const std::vector<int> off = {-1, 0, 1};
    const std::vector<double> c = {1.0, -2.0, 1.0};
    std::vector<double> out(4);
    ref::apply_stencil_zero_ext(u, off, c, out);
    CHECK(out[0] == 1.0 * 0.0 + (-2.0) * 1.0 + 1.0 * 2.0);
    CHECK(out[1] == 1.0 - 4.0 + 3.0);
    CHECK(out[3] == 3.0 - 8.0 + 0.0);
}

TEST_CASE("parallel kernels match the serial reference bit for bit") {
    const Stencil st = optimized_collocated4();
    std::mt19937 rng(17);
    for (std::size_t n : {1UL, 2UL, 7UL, 100UL, 1001UL}) {
        const std::vector<double> curr = random_vec(n, rng);
        const std::vector<double> prev = random_vec(n, rng);
        std::vector<double> a(n), b(n), c(n);
        ref::acoustic_leapfrog(curr, prev, st.offsets, st.coefficients, 0.0016, a);
        kernels::acoustic_leapfrog(curr, prev, st.offsets, st.coefficients, 0.0016, b,
                                   kernels::Exec::serial);
        kernels::acoustic_leapfrog(curr, prev, st.offsets, st.coefficients, 0.0016, c,
                                   kernels::Exec::parallel);
        CHECK(a == b);
        CHECK(a == c);

        std::vector<double> sa(n), sb(n);
        ref::apply_stencil_zero_ext(curr, st.offsets, st.coefficients, sa);
        kernels::apply_stencil_zero_ext(curr, st.offsets, st.coefficients, sb,
                                        kernels::Exec::parallel);
        CHECK(sa == sb);
    }
}

TEST_CASE("elastic phase kernels match the serial reference bit for bit") {
    const std::vector<double> c = {75.0 / 64.0, -25.0 / 384.0, 3.0 / 640.0};
    std::mt19937 rng(31);
    for (auto [nx, nz] : std::vector<std::pair<int, int>>{{7, 5}, {33, 17}, {64, 64}}) {
        Grid2 txx = random_grid(nx, nz, rng), tzz = random_grid(nx, nz, rng);
        Grid2 txz = random_grid(nx - 1, nz - 1, rng);
        Grid2 vx = random_grid(nx - 1, nz, rng), vz = random_grid(nx, nz - 1, rng);
        const Grid2 bx = random_grid(nx - 1, nz, rng, true), bz = random_grid(nx, nz - 1, rng, true);
        const Grid2 lam = random_grid(nx, nz, rng, true), mu = random_grid(nx, nz, rng, true);
        const Grid2 muh = random_grid(nx - 1, nz - 1, rng, true);

        Grid2 vx_r = vx, vz_r = vz, txx_r = txx, tzz_r = tzz, txz_r = txz;
        ref::update_velocities(vx_r, vz_r, txx_r, tzz_r, txz_r, bx, bz, c, 0.1, 0.2);
        ref::update_stresses(txx_r, tzz_r, txz_r, vx_r, vz_r, lam, mu, muh, c, 0.1, 0.2);

        for (auto exec : {kernels::Exec::serial, kernels::Exec::parallel}) {
            Grid2 vx_k = vx, vz_k = vz, txx_k = txx, tzz_k = tzz, txz_k = txz;
            kernels::update_velocities(vx_k, vz_k, txx_k, tzz_k, txz_k, bx, bz, c, 0.1, 0.2, exec);
            kernels::update_stresses(txx_k, tzz_k, txz_k, vx_k, vz_k, lam, mu, muh, c, 0.1, 0.2, exec);
            CHECK(vx_k.v == vx_r.v);
            CHECK(vz_k.v == vz_r.v);
            CHECK(txx_k.v == txx_r.v);
            CHECK(tzz_k.v == tzz_r.v);
            CHECK(txz_k.v == txz_r.v);
        }
    }
}
