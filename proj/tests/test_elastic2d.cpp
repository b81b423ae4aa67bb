#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "sofd/common.hpp"
#include "sofd/elastic2d.hpp"

using namespace sofd;

namespace {

ElasticConfig small_config() {
    ElasticConfig c;
    c.width = 400.0;
    c.depth = 400.0;
    c.layers = {{200.0, 1400.0, 0.0, 1000.0}, {200.0, 4000.0, 2400.0, 2600.0}};
    c.source.x = 200.0;
    c.source.z = 150.0;
    c.t_end = 0.05;
    return c;
}

StaggeredFields advance(const ElasticConfig& cfg, const std::string& scheme, double t_end,
                        kernels::Exec exec = kernels::Exec::parallel) {
    const ElasticModel model = build_model(cfg);
    const DerivedMaterials mats = derive_materials(model);
    const StencilPair pair = staggered_pair(scheme);
    StaggeredFields f = make_fields(model);
    const double dt = cfg.dt();
    const long n = static_cast<long>(std::ceil(t_end / dt - 1e-9));
    for (long s = 0; s < n; ++s) step(f, model, mats, cfg.source, dt, pair, exec);
    return f;
}

}  // namespace

TEST_CASE("two-layer model: water and shale moduli from the stated velocities") {
    const ElasticConfig cfg;  // defaults: 2 km x 2 km, boundary at z = 1000 m
    const ElasticModel m = build_model(cfg);
    CHECK(m.nx == 201);
    CHECK(m.nz == 201);
    // water: mu = 0, lambda = rho vp^2 = 1000 * 1400^2
    CHECK(m.mu.at(10, 10) == 0.0);
    CHECK(m.lam.at(10, 10) == doctest::Approx(1.96e9).epsilon(1e-12));
    CHECK(m.b.at(10, 10) == doctest::Approx(1e-3).epsilon(1e-12));
    // shale: mu = 2600 * 2400^2
    CHECK(m.mu.at(10, 150) == doctest::Approx(1.4976e10).epsilon(1e-12));
    CHECK(m.lam.at(10, 150) == doctest::Approx(2600.0 * (4000.0 * 4000.0 - 2.0 * 2400.0 * 2400.0)).epsilon(1e-12));
    // the z = 1000 m row belongs to the lower layer
    CHECK(m.mu.at(0, 99) == 0.0);
    CHECK(m.mu.at(0, 100) > 0.0);
    CHECK(m.max_vp() == doctest::Approx(4000.0).epsilon(1e-12));
}

TEST_CASE("degenerate single-layer config gives homogeneous arrays") {
    ElasticConfig cfg;
    cfg.layers = {{2000.0, 1400.0, 0.0, 1000.0}};
    const ElasticModel m = build_model(cfg);
    for (int j : {0, 57, 200})
        for (int i : {0, 99, 200}) {
            CHECK(m.lam.at(i, j) == m.lam.at(0, 0));
            CHECK(m.mu.at(i, j) == 0.0);
        }
}

TEST_CASE("model construction rejects bad inputs") {
    ElasticConfig cfg;
    cfg.layers = {{1000.0, 1400.0, 0.0, 1000.0}};  // thicknesses don't sum to depth
    CHECK_THROWS(build_model(cfg));
    cfg = ElasticConfig{};
    cfg.layers = {{2000.0, 1000.0, 900.0, 2000.0}};  // vp^2 < 2 vs^2
    CHECK_THROWS(build_model(cfg));
}

TEST_CASE("ricker wavelet: peak, zeros, decay") {
    RickerSource s;
    s.amplitude = 2.5;
    CHECK(ricker(s, s.t0) == doctest::Approx(2.5).epsilon(1e-15));
    const double zero_tau = 1.0 / (std::sqrt(2.0) * std::numbers::pi * s.f_peak);
    CHECK(std::abs(ricker(s, s.t0 + zero_tau)) < 1e-12 * s.amplitude);
    CHECK(std::abs(ricker(s, s.t0 - zero_tau)) < 1e-12 * s.amplitude);
    CHECK(std::abs(ricker(s, s.t0 + 1.0)) < 1e-12 * s.amplitude);
}

TEST_CASE("staggered pairs share their physical weights") {
    for (const char* scheme : {"optimized", "conventional"}) {
        const StencilPair p = staggered_pair(scheme);
        CHECK(p.half.size() == 3);
        const auto ha = p.a.staggered_half_coefficients();
        const auto hb = p.b.staggered_half_coefficients();
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(p.half[k] == ha[k]);
            CHECK(ha[k] == doctest::Approx(hb[k]).epsilon(1e-14));
        }
    }
    const StencilPair conv = staggered_pair("conventional");
    CHECK(conv.half[0] == doctest::Approx(75.0 / 64.0).epsilon(1e-15));
    CHECK_THROWS(staggered_pair("fancy"));
}

TEST_CASE("zero source and zero fields stay exactly zero") {
    ElasticConfig cfg = small_config();
    cfg.source.amplitude = 0.0;
    const StaggeredFields f = advance(cfg, "optimized", 0.05);
    for (const Grid2* g : {&f.vx, &f.vz, &f.txx, &f.tzz, &f.txz})
        for (double v : g->v) CHECK(v == 0.0);
}

TEST_CASE("interior water never builds shear stress") {
    ElasticConfig cfg;  // full-size model, 200 ms: the P wave has crossed the interface
    cfg.t_end = 0.2;
    const StaggeredFields f = advance(cfg, "optimized", cfg.t_end);
    double max_water_txz = 0.0;
    for (int j = 0; j < 99; ++j)  // txz rows with all-water mu neighbors
        for (int i = 0; i < f.txz.nx; ++i)
            max_water_txz = std::max(max_water_txz, std::abs(f.txz.at(i, j)));
    CHECK(max_water_txz <= 1e-12 * f.txx.max_abs());
    CHECK(f.txx.max_abs() > 0.0);
}

TEST_CASE("homogeneous model: wavefront along the source row travels at vp") {
    ElasticConfig cfg;
    cfg.layers = {{2000.0, 1400.0, 0.0, 1000.0}};
    cfg.t_end = 0.5;
    const StaggeredFields f = advance(cfg, "optimized", cfg.t_end);
    const int sj = 75, si = 100;
    double row_max = 0.0;
    for (int i = 0; i < f.txx.nx; ++i) row_max = std::max(row_max, std::abs(f.txx.at(i, sj)));
    int outermost = si;
    for (int i = 0; i < f.txx.nx; ++i)
        if (std::abs(f.txx.at(i, sj)) > 1e-3 * row_max) outermost = std::max(outermost, i);
    const double radius = (outermost - si) * cfg.dx;
    CHECK(std::abs(radius - 1400.0 * f.time) <= cfg.dx);
}

TEST_CASE("energy is still inside the water layer at 100 ms") {
    ElasticConfig cfg;
    cfg.t_end = 0.1;
    const StaggeredFields f = advance(cfg, "conventional", cfg.t_end);
    const double m0 = f.txx.max_abs();
    double r_max = 0.0;
    for (int j = 0; j < f.txx.nz; ++j)
        for (int i = 0; i < f.txx.nx; ++i)
            if (std::abs(f.txx.at(i, j)) > 1e-3 * m0)
                r_max = std::max(r_max, std::hypot((i - 100) * cfg.dx, (j - 75) * cfg.dz));
    // 1400 m/s for 100 ms plus the source pulse footprint
    CHECK(r_max < 1400.0 * 0.1 + 4 * cfg.dx);
    CHECK(r_max > 1400.0 * 0.1 - 6 * cfg.dx);
}

TEST_CASE("x-mirror symmetry about the source axis") {
    ElasticConfig cfg;
    cfg.t_end = 0.3;
    const StaggeredFields f = advance(cfg, "optimized", cfg.t_end);
    const int nx = f.txx.nx;  // 201; mirror i -> 200 - i, vx/txz i -> 199 - i
    auto rel = [](double d, double scale) { return scale > 0 ? d / scale : 0.0; };
    double worst = 0.0;
    for (int j = 0; j < f.txx.nz; ++j)
        for (int i = 0; i < nx; ++i) {
            worst = std::max(worst, rel(std::abs(f.txx.at(i, j) - f.txx.at(nx - 1 - i, j)),
                                        f.txx.max_abs()));
            worst = std::max(worst, rel(std::abs(f.tzz.at(i, j) - f.tzz.at(nx - 1 - i, j)),
                                        f.tzz.max_abs()));
        }
    for (int j = 0; j < f.vz.nz; ++j)
        for (int i = 0; i < nx; ++i)
            worst = std::max(worst, rel(std::abs(f.vz.at(i, j) - f.vz.at(nx - 1 - i, j)), f.vz.max_abs()));
    for (int j = 0; j < f.vx.nz; ++j)
        for (int i = 0; i < f.vx.nx; ++i)
            worst = std::max(worst,
                             rel(std::abs(f.vx.at(i, j) + f.vx.at(f.vx.nx - 1 - i, j)), f.vx.max_abs()));
    for (int j = 0; j < f.txz.nz; ++j)
        for (int i = 0; i < f.txz.nx; ++i)
            worst = std::max(worst, rel(std::abs(f.txz.at(i, j) + f.txz.at(f.txz.nx - 1 - i, j)),
                                        f.txz.max_abs()));
    CHECK(worst < 1e-6);
}

TEST_CASE("the two schemes stay within 5% of each other mid-run") {
    ElasticConfig cfg;
    cfg.t_end = 0.3;
    const StaggeredFields a = advance(cfg, "conventional", cfg.t_end);
    const StaggeredFields b = advance(cfg, "optimized", cfg.t_end);
    const double global_scale =
        std::max({a.vx.max_abs(), a.vz.max_abs(), a.txx.max_abs(), a.tzz.max_abs(), a.txz.max_abs()});
    auto closeness = [&](const Grid2& ga, const Grid2& gb) {
        const double denom = std::max(ga.max_abs(), gb.max_abs());
        if (denom < 1e-9 * global_scale) return 0.0;  // below the noise floor
        double worst = 0.0;
        for (std::size_t i = 0; i < ga.v.size(); ++i)
            worst = std::max(worst, std::abs(ga.v[i] - gb.v[i]) / denom);
        return worst;
    };
    CHECK(closeness(a.vx, b.vx) < 0.05);
    CHECK(closeness(a.vz, b.vz) < 0.05);
    CHECK(closeness(a.txx, b.txx) < 0.05);
    CHECK(closeness(a.tzz, b.tzz) < 0.05);
    CHECK(closeness(a.txz, b.txz) < 0.05);
    // velocities stay bounded: no exponential growth at this courant
    CHECK(b.vx.max_abs() < 1.0);
    CHECK(b.vz.max_abs() < 1.0);
}

TEST_CASE("parallel and serial executions agree bit for bit") {
    ElasticConfig cfg = small_config();
    const StaggeredFields a = advance(cfg, "optimized", cfg.t_end, kernels::Exec::parallel);
    const StaggeredFields b = advance(cfg, "optimized", cfg.t_end, kernels::Exec::serial);
    CHECK(a.vx.v == b.vx.v);
    CHECK(a.vz.v == b.vz.v);
    CHECK(a.txx.v == b.txx.v);
    CHECK(a.tzz.v == b.tzz.v);
    CHECK(a.txz.v == b.txz.v);
}

TEST_CASE("identical configurations give bit-identical runs") {
    ElasticConfig cfg = small_config();
    const StencilPair pair = staggered_pair("conventional");
    const auto s1 = run(cfg, pair);
    const auto s2 = run(cfg, pair);
    REQUIRE(s1.size() == s2.size());
    for (std::size_t g = 0; g < s1.size(); ++g)
        for (std::size_t k = 0; k < s1[g].fields.size(); ++k)
            CHECK(s1[g].fields[k].data.v == s2[g].fields[k].data.v);
}

TEST_CASE("run writes a snapshot group at t = 0 and each interval") {
    ElasticConfig cfg = small_config();
    cfg.t_end = 0.0;
    const auto zero = run(cfg, staggered_pair("optimized"));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].ms_label == 0);
    for (const Snapshot& s : zero[0].fields)
        for (double v : s.data.v) CHECK(v == 0.0);

    cfg.t_end = 0.05;
    cfg.snapshot_interval = 0.02;
    const auto snaps = run(cfg, staggered_pair("optimized"));
    REQUIRE(snaps.size() == 3);  // 0, 20, 40 ms; the run ends at 50.1 ms
    CHECK(snaps[1].ms_label == 20);
    CHECK(snaps[2].ms_label == 40);
}

TEST_CASE("field_difference: identical, mismatched, and zero-field cases") {
    ElasticConfig cfg = small_config();
    const auto snaps = run(cfg, staggered_pair("optimized"));
    const Snapshot& last = snaps.back().fields[0];
    const FieldDifference same = field_difference(last, last);
    CHECK(same.max_normalized == 0.0);
    for (double v : same.diff.data.v) CHECK(v == 0.0);

    Snapshot other = last;
    other.t += 1.0;
    CHECK_THROWS(field_difference(last, other));
    other = last;
    other.nx += 1;
    CHECK_THROWS(field_difference(last, other));

    Snapshot za = last, zb = last;
    za.data.v.assign(za.data.v.size(), 0.0);
    zb.data.v.assign(zb.data.v.size(), 0.0);
    CHECK(field_difference(za, zb).max_normalized == 0.0);
}

TEST_CASE("instability is reported, not propagated as garbage") {
    ElasticConfig cfg = small_config();
    cfg.courant = 0.47;
    cfg.vmax_for_dt = 6000.0;
    // force instability by shrinking vmax_for_dt far below the model maximum
    cfg.vmax_for_dt = 500.0;
    CHECK_THROWS_AS(run(cfg, staggered_pair("optimized")), std::invalid_argument);

    // a stable dt but absurd courant trips the explicit stability guard
    cfg = small_config();
    cfg.courant = 2.0;
    CHECK_THROWS(run(cfg, staggered_pair("optimized")));
}
