#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sofd/kernels.hpp"
#include "sofd/metrics.hpp"
#include "sofd/stencil.hpp"

namespace sofd {

/// 1D acoustic "wave on a string" with zero Dirichlet ends: a square-wave
/// initial displacement built from its sine series, advanced by leapfrog.
///
/// The time step defaults to courant * dx / c0 with courant 0.04. The source
/// experiments quote a Courant number of 0.2, but their reported errors are
/// only reached when temporal dispersion is negligible next to the spatial
/// misfit; 0.04 is the calibrated default that reproduces them (see README).
struct Acoustic1DConfig {
    double length = 10.0;        // meters
    double wavespeed = 1.0;      // m/s
    double courant = 0.04;
    std::optional<double> dt_override;  // fixed dt for convergence studies
    int n_cells = 400;           // grid points = n_cells + 1, dx = length / n_cells
    double t_end = 20.0;         // seconds
    int series_terms = 100;
    double amplitude = 0.1;
    std::string scheme = "optimized4";
    double error_interval = 0.2;  // seconds between error samples
    bool parallel = false;        // OpenMP over grid points in the update

    double dx() const { return length / n_cells; }
    double dt() const { return dt_override ? *dt_override : courant * dx() / wavespeed; }
    int n_points() const { return n_cells + 1; }
    void validate() const;
};

/// Separable-solution series for the square-wave initial condition:
///   u(x, t) = sum_m coefficients[m-1] sin(2 m pi x / L) cos(2 m pi c0 t / L)
/// Only m = 2 (mod 4) modes are present; coefficients[m-1] = 8 A / (m pi) there.
struct AnalyticSolution {
    double length = 10.0;
    double wavespeed = 1.0;
    double amplitude = 0.1;
    int terms = 100;
    std::vector<double> coefficients;  // index m-1, m = 1..terms

    double eval(double x, double t) const;
    void eval_grid(double t, std::span<double> out) const;  // on the n=out.size()-1 cell grid
};

/// Closed-form sine-series coefficients of the square wave (amplitude-scaled).
AnalyticSolution fourier_coefficients(const Acoustic1DConfig& config);

struct Wavefield1D {
    std::vector<double> u_prev, u_curr;
    double time = 0.0;
    bool primed = false;  // false: at rest, the first step uses the half-step form
};

/// Square-wave series sampled on the grid at t = 0, at rest, ends pinned to 0.
Wavefield1D initial_condition(const Acoustic1DConfig& config);

/// Arbitrary initial displacement (rest start); used for single-mode and
/// convergence studies.
Wavefield1D wavefield_from(const Acoustic1DConfig& config,
                           const std::function<double(double)>& displacement);

/// One leapfrog step:
///   u's spatial term uses zero extension beyond the grid, end points are
///   re-pinned to zero afterwards. An unprimed (at rest) field takes the
///   second-order start u^1 = u^0 + (lam^2/2) S u^0. Throws
///   instability_error when non-finite values appear.
void step(Wavefield1D& field, const Acoustic1DConfig& config, const Stencil& stencil);

/// Advances to t_end sampling mean |u - analytic| / amplitude at t = 0 and
/// every error_interval (plus the final time).
ErrorTrace run_with_errors(const Acoustic1DConfig& config);

/// Same, also collecting field copies at the requested times.
struct FieldSample {
    double t = 0.0;
    std::vector<double> u;
    std::vector<double> analytic;
};
ErrorTrace run_with_errors(const Acoustic1DConfig& config, std::span<const double> snapshot_times,
                           std::vector<FieldSample>& snapshots);

struct SweepRow {
    double dx = 0.0;
    std::string scheme;
    double final_error = 0.0;
    double pct_timesteps_better = 0.0;  // vs the other scheme of the pair
};

/// Runs optimized4 and conventional6 for each cell count; emits one row per
/// (dx, scheme).
std::vector<SweepRow> sweep(const Acoustic1DConfig& base, std::span<const int> n_cells_list);

std::vector<int> fine_sweep_cells();  // 400..500 step 10
std::vector<int> wide_sweep_cells();  // 250..1000 step 50

/// One-sided discrete-Fourier amplitude spectrum (plain O(N^2) DFT).
/// raw_amplitude is scaled so that sum raw^2 = sum u^2 (Parseval);
/// amplitude is raw normalized to unit maximum.
struct Spectrum {
    std::vector<double> frequency;   // cycles per meter
    std::vector<double> amplitude;
    std::vector<double> raw_amplitude;
};
Spectrum spatial_spectrum(std::span<const double> u, double dx);

}  // namespace sofd
