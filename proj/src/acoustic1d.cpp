#include "sofd/acoustic1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sofd/common.hpp"

namespace sofd {

void Acoustic1DConfig::validate() const {
    if (!(length > 0) || n_cells < 1) throw std::invalid_argument("acoustic1d: invalid grid");
    if (!(wavespeed > 0)) throw std::invalid_argument("acoustic1d: wavespeed must be positive");
    if (!(courant > 0) || courant > 1.0) throw std::invalid_argument("acoustic1d: courant must be in (0, 1]");
    if (dt_override && !(*dt_override > 0)) throw std::invalid_argument("acoustic1d: dt must be positive");
    if (!(t_end >= 0)) throw std::invalid_argument("acoustic1d: t_end must be nonnegative");
    if (series_terms < 1) throw std::invalid_argument("acoustic1d: series_terms must be >= 1");
    if (!(amplitude > 0)) throw std::invalid_argument("acoustic1d: amplitude must be positive");
    if (!(error_interval > 0)) throw std::invalid_argument("acoustic1d: error_interval must be positive");
}

double AnalyticSolution::eval(double x, double t) const {
    const double wx = 2.0 * std::numbers::pi * x / length;
    const double wt = 2.0 * std::numbers::pi * wavespeed * t / length;
    double u = 0.0;
    for (int m = 1; m <= terms; ++m) {
        const double c = coefficients[static_cast<std::size_t>(m - 1)];
        if (c == 0.0) continue;
        u += c * std::sin(m * wx) * std::cos(m * wt);
    }
    return u;
}

void AnalyticSolution::eval_grid(double t, std::span<double> out) const {
    const int n = static_cast<int>(out.size()) - 1;
    for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = eval(length * i / n, t);
    out[0] = 0.0;
    out[static_cast<std::size_t>(n)] = 0.0;
}

AnalyticSolution fourier_coefficients(const Acoustic1DConfig& config) {
    config.validate();
    AnalyticSolution s;
    s.length = config.length;
    s.wavespeed = config.wavespeed;
    s.amplitude = config.amplitude;
    s.terms = config.series_terms;
    s.coefficients.assign(static_cast<std::size_t>(s.terms), 0.0);
    // Sine series of the square wave (+A on the first quarter-period,
    // -A on the second, period L/2): only m = 2 (mod 4) survives.
    for (int m = 2; m <= s.terms; m += 4)
        s.coefficients[static_cast<std::size_t>(m - 1)] = 8.0 * config.amplitude / (m * std::numbers::pi);
    return s;
}

Wavefield1D initial_condition(const Acoustic1DConfig& config) {
    const AnalyticSolution sol = fourier_coefficients(config);
    Wavefield1D f;
    f.u_curr.resize(static_cast<std::size_t>(config.n_points()));
    sol.eval_grid(0.0, f.u_curr);
    f.u_prev = f.u_curr;
    f.time = 0.0;
    f.primed = false;
    return f;
}

Wavefield1D wavefield_from(const Acoustic1DConfig& config,
                           const std::function<double(double)>& displacement) {
    config.validate();
    Wavefield1D f;
    const int n = config.n_cells;
    f.u_curr.resize(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) f.u_curr[static_cast<std::size_t>(i)] = displacement(config.length * i / n);
    f.u_curr[0] = 0.0;
    f.u_curr[static_cast<std::size_t>(n)] = 0.0;
    f.u_prev = f.u_curr;
    f.time = 0.0;
    f.primed = false;
    return f;
}

void step(Wavefield1D& field, const Acoustic1DConfig& config, const Stencil& stencil) {
    if (stencil.derivative_order != 2 || stencil.grid_kind != GridKind::collocated)
        throw std::invalid_argument("acoustic step requires a collocated second-derivative stencil");
    const double dt = config.dt();
    const double lam2 = std::pow(config.wavespeed * dt / config.dx(), 2);
    const std::size_t n = field.u_curr.size();
    const auto exec = config.parallel ? kernels::Exec::parallel : kernels::Exec::serial;

    std::vector<double> next(n);
    if (!field.primed) {
        // at-rest start: u^1 = u^0 + (lam^2 / 2) S u^0 (ghost history u^-1 = u^1)
        std::vector<double> s(n);
        kernels::apply_stencil_zero_ext(field.u_curr, stencil.offsets, stencil.coefficients, s, exec);
        for (std::size_t i = 0; i < n; ++i) next[i] = field.u_curr[i] + 0.5 * lam2 * s[i];
        field.primed = true;
    } else {
        kernels::acoustic_leapfrog(field.u_curr, field.u_prev, stencil.offsets, stencil.coefficients,
                                   lam2, next, exec);
    }
    next[0] = 0.0;
    next[n - 1] = 0.0;
    for (double v : next)
        if (!std::isfinite(v))
            throw instability_error("acoustic1d: non-finite value at t = " + std::to_string(field.time + dt));
    field.u_prev = std::move(field.u_curr);
    field.u_curr = std::move(next);
    field.time += dt;
}

namespace {

ErrorTrace run_impl(const Acoustic1DConfig& config, std::span<const double> snapshot_times,
                    std::vector<FieldSample>* snapshots) {
    config.validate();
    const Stencil stencil = scheme_by_name(config.scheme);
    const AnalyticSolution sol = fourier_coefficients(config);
    Wavefield1D f = initial_condition(config);

    ErrorTrace trace;
    trace.label = config.scheme;
    std::vector<double> ua(static_cast<std::size_t>(config.n_points()));
    auto record = [&](double t) {
        sol.eval_grid(t, ua);
        trace.t.push_back(t);
        trace.value.push_back(mean_abs_error(f.u_curr, ua, config.amplitude));
    };
    std::vector<double> pending(snapshot_times.begin(), snapshot_times.end());
    std::sort(pending.begin(), pending.end());
    std::size_t next_snap = 0;
    auto snap = [&](double t) {
        if (!snapshots) return;
        while (next_snap < pending.size() && t >= pending[next_snap] - 1e-9) {
            sol.eval_grid(t, ua);
            snapshots->push_back({t, f.u_curr, ua});
            ++next_snap;
        }
    };

    record(0.0);
    snap(0.0);
    const double dt = config.dt();
    const long nstep = std::lround(config.t_end / dt);
    long next_sample = 1;
    for (long s = 1; s <= nstep; ++s) {
        step(f, config, stencil);
        const double t = static_cast<double>(s) * dt;
        f.time = t;  // avoid accumulated addition drift in the sample schedule
        if (t >= next_sample * config.error_interval - 1e-9) {
            record(t);
            ++next_sample;
        }
        snap(t);
    }
    if (nstep > 0 && trace.t.back() < f.time - 1e-9) record(f.time);
    trace.validate();
    return trace;
}

}  // namespace

ErrorTrace run_with_errors(const Acoustic1DConfig& config) {
    return run_impl(config, {}, nullptr);
}

ErrorTrace run_with_errors(const Acoustic1DConfig& config, std::span<const double> snapshot_times,
                           std::vector<FieldSample>& snapshots) {
    return run_impl(config, snapshot_times, &snapshots);
}

std::vector<SweepRow> sweep(const Acoustic1DConfig& base, std::span<const int> n_cells_list) {
    if (n_cells_list.empty()) throw std::invalid_argument("sweep: empty cell list");
    std::vector<SweepRow> rows;
    for (int n : n_cells_list) {
        Acoustic1DConfig cfg = base;
        cfg.n_cells = n;
        cfg.scheme = "optimized4";
        const ErrorTrace opt = run_with_errors(cfg);
        cfg.scheme = "conventional6";
        const ErrorTrace conv = run_with_errors(cfg);
        rows.push_back({cfg.dx(), "optimized4", opt.final_value(), pct_better(opt, conv)});
        rows.push_back({cfg.dx(), "conventional6", conv.final_value(), pct_better(conv, opt)});
    }
    return rows;
}

std::vector<int> fine_sweep_cells() {
    std::vector<int> v;
    for (int n = 400; n <= 500; n += 10) v.push_back(n);
    return v;
}

std::vector<int> wide_sweep_cells() {
    std::vector<int> v;
    for (int n = 250; n <= 1000; n += 50) v.push_back(n);
    return v;
}

Spectrum spatial_spectrum(std::span<const double> u, double dx) {
    const int n = static_cast<int>(u.size());
    if (n < 2) throw std::invalid_argument("spatial_spectrum: need at least 2 samples");
    Spectrum sp;
    const int half = n / 2;
    sp.frequency.reserve(static_cast<std::size_t>(half) + 1);
    sp.raw_amplitude.reserve(static_cast<std::size_t>(half) + 1);
    for (int k = 0; k <= half; ++k) {
        double re = 0.0, im = 0.0;
        for (int i = 0; i < n; ++i) {
            const double ph = -2.0 * std::numbers::pi * k * i / n;
            re += u[static_cast<std::size_t>(i)] * std::cos(ph);
            im += u[static_cast<std::size_t>(i)] * std::sin(ph);
        }
        const double mag = std::hypot(re, im);
        // fold the conjugate half so that sum raw^2 = sum u^2 (Parseval)
        const bool shared = (k == 0) || (n % 2 == 0 && k == half);
        sp.frequency.push_back(k / (n * dx));
        sp.raw_amplitude.push_back(mag * std::sqrt((shared ? 1.0 : 2.0) / n));
    }
    double mx = 0.0;
    for (double a : sp.raw_amplitude) mx = std::max(mx, a);
    sp.amplitude.resize(sp.raw_amplitude.size());
    for (std::size_t i = 0; i < sp.amplitude.size(); ++i)
        sp.amplitude[i] = mx > 0 ? sp.raw_amplitude[i] / mx : 0.0;
    return sp;
}

}  // namespace sofd
