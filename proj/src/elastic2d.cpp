#include "sofd/elastic2d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sofd/common.hpp"

namespace sofd {

void ElasticConfig::validate() const {
    if (!(width > 0) || !(depth > 0) || !(dx > 0) || !(dz > 0))
        throw std::invalid_argument("elastic2d: invalid domain");
    if (layers.empty()) throw std::invalid_argument("elastic2d: no layers");
    if (!(courant > 0)) throw std::invalid_argument("elastic2d: courant must be positive");
    if (!(vmax_for_dt > 0)) throw std::invalid_argument("elastic2d: vmax_for_dt must be positive");
    if (!(t_end >= 0)) throw std::invalid_argument("elastic2d: t_end must be nonnegative");
    if (!(snapshot_interval > 0)) throw std::invalid_argument("elastic2d: snapshot_interval must be positive");
    if (!(source.f_peak > 0)) throw std::invalid_argument("elastic2d: f_peak must be positive");
    double total = 0.0;
    for (const Layer& l : layers) total += l.thickness;
    if (std::abs(total - depth) > 1e-9 * depth)
        throw std::invalid_argument("elastic2d: layer thicknesses must sum to the domain depth");
}

double ElasticModel::max_vp() const {
    double vmax = 0.0;
    for (std::size_t i = 0; i < lam.v.size(); ++i) {
        const double rho = 1.0 / b.v[i];
        const double vp = std::sqrt((lam.v[i] + 2.0 * mu.v[i]) / rho);
        vmax = std::max(vmax, vp);
    }
    return vmax;
}

ElasticModel build_model(const ElasticConfig& config) {
    config.validate();
    ElasticModel m;
    m.nx = config.nx();
    m.nz = config.nz();
    m.dx = config.dx;
    m.dz = config.dz;
    m.lam = Grid2(m.nx, m.nz);
    m.mu = Grid2(m.nx, m.nz);
    m.b = Grid2(m.nx, m.nz);
    for (int j = 0; j < m.nz; ++j) {
        const double z = j * m.dz;
        double top = 0.0;
        const Layer* layer = &config.layers.back();
        for (const Layer& l : config.layers) {
            if (z < top + l.thickness) {
                layer = &l;
                break;
            }
            top += l.thickness;
        }
        const double lam_v = layer->rho * (layer->vp * layer->vp - 2.0 * layer->vs * layer->vs);
        const double mu_v = layer->rho * layer->vs * layer->vs;
        if (!(lam_v > 0)) throw std::invalid_argument("elastic2d: vp^2 < 2 vs^2 gives nonpositive lambda");
        if (!(layer->rho > 0)) throw std::invalid_argument("elastic2d: density must be positive");
        for (int i = 0; i < m.nx; ++i) {
            m.lam.at(i, j) = lam_v;
            m.mu.at(i, j) = mu_v;
            m.b.at(i, j) = 1.0 / layer->rho;
        }
    }
    return m;
}

double ricker(const RickerSource& source, double t) {
    const double tau = t - source.t0;
    const double a = std::pow(std::numbers::pi * source.f_peak * tau, 2);
    return source.amplitude * (1.0 - 2.0 * a) * std::exp(-a);
}

StaggeredFields make_fields(const ElasticModel& model) {
    StaggeredFields f;
    f.vx = Grid2(model.nx - 1, model.nz);
    f.vz = Grid2(model.nx, model.nz - 1);
    f.txx = Grid2(model.nx, model.nz);
    f.tzz = Grid2(model.nx, model.nz);
    f.txz = Grid2(model.nx - 1, model.nz - 1);
    return f;
}

DerivedMaterials derive_materials(const ElasticModel& model) {
    DerivedMaterials d;
    d.bx = Grid2(model.nx - 1, model.nz);
    for (int j = 0; j < model.nz; ++j)
        for (int i = 0; i < model.nx - 1; ++i)
            d.bx.at(i, j) = 0.5 * (model.b.at(i, j) + model.b.at(i + 1, j));
    d.bz = Grid2(model.nx, model.nz - 1);
    for (int j = 0; j < model.nz - 1; ++j)
        for (int i = 0; i < model.nx; ++i)
            d.bz.at(i, j) = 0.5 * (model.b.at(i, j) + model.b.at(i, j + 1));
    d.muh = Grid2(model.nx - 1, model.nz - 1);
    for (int j = 0; j < model.nz - 1; ++j)
        for (int i = 0; i < model.nx - 1; ++i)
            d.muh.at(i, j) = 0.25 * (model.mu.at(i, j) + model.mu.at(i + 1, j) +
                                     model.mu.at(i, j + 1) + model.mu.at(i + 1, j + 1));
    return d;
}

StencilPair staggered_pair(const std::string& scheme) {
    StencilPair p;
    p.name = scheme;
    if (scheme == "optimized") {
        p.a = optimized_staggered4(GridKind::staggered_forward);
        p.b = optimized_staggered4(GridKind::staggered_backward);
    } else if (scheme == "conventional") {
        p.a = conventional_staggered6(GridKind::staggered_forward);
        p.b = conventional_staggered6(GridKind::staggered_backward);
    } else {
        throw std::invalid_argument("unknown elastic scheme: " + scheme + " (use optimized|conventional)");
    }
    p.half = p.a.staggered_half_coefficients();
    const std::vector<double> hb = p.b.staggered_half_coefficients();
    for (std::size_t k = 0; k < p.half.size(); ++k)
        if (std::abs(p.half[k] - hb[k]) > 1e-12)
            throw std::logic_error("staggered pair: type A/B coefficients differ");
    return p;
}

void step(StaggeredFields& f, const ElasticModel& model, const DerivedMaterials& mats,
          const RickerSource& source, double dt, const StencilPair& pair, kernels::Exec exec) {
    const double dt_dx = dt / model.dx;
    const double dt_dz = dt / model.dz;
    kernels::update_velocities(f.vx, f.vz, f.txx, f.tzz, f.txz, mats.bx, mats.bz, pair.half, dt_dx,
                               dt_dz, exec);
    kernels::update_stresses(f.txx, f.tzz, f.txz, f.vx, f.vz, model.lam, model.mu, mats.muh,
                             pair.half, dt_dx, dt_dz, exec);
    const int si = static_cast<int>(std::lround(source.x / model.dx));
    const int sj = static_cast<int>(std::lround(source.z / model.dz));
    if (si >= 0 && si < model.nx && sj >= 0 && sj < model.nz) {
        const double s = dt * ricker(source, f.time + 0.5 * dt);
        f.txx.at(si, sj) += s;
        f.tzz.at(si, sj) += s;
    }
    f.time += dt;
    ++f.step_count;
    if (!f.vx.all_finite() || !f.vz.all_finite() || !f.txx.all_finite() || !f.tzz.all_finite() ||
        !f.txz.all_finite())
        throw instability_error("elastic2d: non-finite value at t = " + std::to_string(f.time));
}

namespace {

Snapshot make_snapshot(const std::string& field, const Grid2& g, const ElasticModel& m, double t) {
    Snapshot s;
    s.field = field;
    s.nx = g.nx;
    s.nz = g.nz;
    s.dx = m.dx;
    s.dz = m.dz;
    s.t = t;
    s.data = g;
    return s;
}

SnapshotGroup snapshot_group(const StaggeredFields& f, const ElasticModel& m, int ms_label) {
    SnapshotGroup g;
    g.ms_label = ms_label;
    g.t = f.time;
    g.fields.push_back(make_snapshot("vx", f.vx, m, f.time));
    g.fields.push_back(make_snapshot("vz", f.vz, m, f.time));
    g.fields.push_back(make_snapshot("txx", f.txx, m, f.time));
    g.fields.push_back(make_snapshot("tzz", f.tzz, m, f.time));
    g.fields.push_back(make_snapshot("txz", f.txz, m, f.time));
    return g;
}

}  // namespace

std::vector<SnapshotGroup> run(const ElasticConfig& config, const StencilPair& pair,
                               kernels::Exec exec) {
    const ElasticModel model = build_model(config);
    if (model.max_vp() > config.vmax_for_dt * (1.0 + 1e-12))
        throw std::invalid_argument("elastic2d: vmax_for_dt below the model's maximum P velocity");
    const double dt = config.dt();
    // staggered-leapfrog stability bound with the actual stencil weights
    double csum = 0.0;
    for (double c : pair.half) csum += std::abs(c);
    const double cfl = config.vmax_for_dt * dt *
                       std::sqrt(1.0 / (config.dx * config.dx) + 1.0 / (config.dz * config.dz)) * csum;
    if (cfl > 1.0)
        throw std::invalid_argument("elastic2d: courant violates the staggered stability bound");

    const DerivedMaterials mats = derive_materials(model);
    StaggeredFields f = make_fields(model);

    std::vector<SnapshotGroup> out;
    out.push_back(snapshot_group(f, model, 0));
    const long nstep = static_cast<long>(std::ceil(config.t_end / dt - 1e-9));
    long next_snap = 1;
    for (long s = 1; s <= nstep; ++s) {
        step(f, model, mats, config.source, dt, pair, exec);
        f.time = static_cast<double>(s) * dt;
        if (f.time >= next_snap * config.snapshot_interval - 1e-9) {
            out.push_back(snapshot_group(f, model,
                                         static_cast<int>(std::lround(next_snap * config.snapshot_interval * 1000.0))));
            ++next_snap;
        }
    }
    return out;
}

FieldDifference field_difference(const Snapshot& a, const Snapshot& b) {
    if (a.nx != b.nx || a.nz != b.nz || a.field != b.field)
        throw std::invalid_argument("field_difference: shape or field mismatch");
    if (std::abs(a.t - b.t) > 1e-9 * std::max(1.0, std::abs(a.t)))
        throw std::invalid_argument("field_difference: snapshot times differ");
    FieldDifference d;
    d.diff = a;
    const double denom = std::max(a.data.max_abs(), b.data.max_abs());
    for (std::size_t i = 0; i < d.diff.data.v.size(); ++i) {
        const double delta = a.data.v[i] - b.data.v[i];
        d.diff.data.v[i] = denom > 0 ? delta / denom : 0.0;
        d.max_normalized = std::max(d.max_normalized, std::abs(d.diff.data.v[i]));
    }
    return d;
}

}  // namespace sofd
