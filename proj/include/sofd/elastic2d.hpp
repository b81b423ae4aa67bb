#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "sofd/io.hpp"
#include "sofd/kernels.hpp"
#include "sofd/stencil.hpp"

namespace sofd {

struct Layer {
    double thickness = 0.0;  // meters
    double vp = 0.0;         // m/s
    double vs = 0.0;
    double rho = 0.0;        // kg/m^3
};

struct RickerSource {
    double f_peak = 11.2;          // Hz
    double t0 = 1.0 / 11.2;        // seconds; pulse peak time
    double amplitude = 1.0;
    double x = 1000.0, z = 750.0;  // meters
};

struct ElasticConfig {
    double width = 2000.0, depth = 2000.0;  // meters
    double dx = 10.0, dz = 10.0;
    std::vector<Layer> layers = {{1000.0, 1400.0, 0.0, 1000.0}, {1000.0, 4000.0, 2400.0, 2600.0}};
    double courant = 0.47;
    double vmax_for_dt = 6000.0;   // dt = courant * dx / vmax_for_dt; kept above the model max vp
    double t_end = 0.6;            // seconds
    double snapshot_interval = 0.1;
    RickerSource source;

    int nx() const { return static_cast<int>(std::lround(width / dx)) + 1; }
    int nz() const { return static_cast<int>(std::lround(depth / dz)) + 1; }
    double dt() const { return courant * dx / vmax_for_dt; }
    void validate() const;
};

/// Material grids on the normal-stress lattice (node (i, j) at x = i dx,
/// z = j dz, z increasing downward).
struct ElasticModel {
    int nx = 0, nz = 0;
    double dx = 10.0, dz = 10.0;
    Grid2 lam, mu, b;  // first/second Lame parameter, buoyancy = 1/rho

    double max_vp() const;
};

/// Layer fill by depth: a node belongs to the layer containing its z.
/// Throws when thicknesses do not sum to the domain depth or vp^2 < 2 vs^2.
ElasticModel build_model(const ElasticConfig& config);

/// Ricker wavelet: amplitude (1 - 2 pi^2 f^2 tau^2) exp(-pi^2 f^2 tau^2),
/// tau = t - t0.
double ricker(const RickerSource& source, double t);

/// Virieux staggering: txx/tzz at (i, j), vx at (i+1/2, j), vz at (i, j+1/2),
/// txz at (i+1/2, j+1/2). Velocities live half a time step behind stresses.
struct StaggeredFields {
    Grid2 vx, vz, txx, tzz, txz;
    double time = 0.0;
    long step_count = 0;
};

StaggeredFields make_fields(const ElasticModel& model);

/// Buoyancy arithmetically averaged to the velocity nodes and mu
/// arithmetically averaged to the txz nodes (an all-fluid neighborhood keeps
/// mu = 0, so interior water never shears).
struct DerivedMaterials {
    Grid2 bx, bz, muh;
};
DerivedMaterials derive_materials(const ElasticModel& model);

/// Type A/B staggered first-derivative pair with shared half-offset weights.
struct StencilPair {
    Stencil a, b;
    std::vector<double> half;  // weights at +(k+1/2)
    std::string name;          // "optimized" or "conventional"
};
StencilPair staggered_pair(const std::string& scheme);

/// One leapfrog step: velocities from current stresses, then stresses from
/// the new velocities; the source adds dt * ricker(t + dt/2) to both normal
/// stresses at the nearest normal-stress node. Out-of-range reads are zero.
void step(StaggeredFields& f, const ElasticModel& model, const DerivedMaterials& mats,
          const RickerSource& source, double dt, const StencilPair& pair,
          kernels::Exec exec = kernels::Exec::parallel);

/// All five fields at one snapshot time.
struct SnapshotGroup {
    int ms_label = 0;    // scheduled time in milliseconds
    double t = 0.0;      // actual field time
    std::vector<Snapshot> fields;  // vx, vz, txx, tzz, txz
};

/// Advances to t_end writing a snapshot group at t = 0 and at every
/// snapshot_interval (captured at the first step reaching the scheduled time).
std::vector<SnapshotGroup> run(const ElasticConfig& config, const StencilPair& pair,
                               kernels::Exec exec = kernels::Exec::parallel);

/// (a - b) / max(|a| united with |b|) plus the max-abs statistic; zero fields
/// give a zero difference.
struct FieldDifference {
    Snapshot diff;
    double max_normalized = 0.0;
};
FieldDifference field_difference(const Snapshot& a, const Snapshot& b);

}  // namespace sofd
