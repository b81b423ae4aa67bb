#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sofd/acoustic1d.hpp"
#include "sofd/common.hpp"
#include "sofd/dispersion.hpp"
#include "sofd/elastic2d.hpp"
#include "sofd/io.hpp"
#include "sofd/metrics.hpp"
#include "sofd/stencil.hpp"

namespace sofd::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class Manifest {
public:
    Manifest(std::string subcommand, fs::path out_dir)
        : subcommand_(std::move(subcommand)), out_dir_(std::move(out_dir)),
          start_(std::chrono::steady_clock::now()) {}

    json& params() { return params_; }
    void add_output(const fs::path& p) { outputs_.push_back(p.lexically_normal().string()); }

    void write() const {
        json m;
        m["artifact_version"] = kArtifactVersion;
        m["subcommand"] = subcommand_;
        m["parameters"] = params_;
        m["outputs"] = outputs_;
        m["wall_time_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        fs::create_directories(out_dir_);
        std::ofstream out(out_dir_ / "manifest.json", std::ios::binary);
        out << m.dump(2) << "\n";
    }

private:
    std::string subcommand_;
    fs::path out_dir_;
    json params_;
    std::vector<std::string> outputs_;
    std::chrono::steady_clock::time_point start_;
};

std::string csv_line(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ",";
        s += cells[i];
    }
    return s;
}

void print_table(std::ostream& os, const Table& t) {
    for (const auto& c : t.comments) os << "# " << c << "\n";
    os << csv_line(t.columns) << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format17(row[i]);
        os << "\n";
    }
}

// --------------------------------------------------------------------------
// optimize
// --------------------------------------------------------------------------

struct OptimizeArgs {
    std::string derivative = "second";
    std::string grid;
    int extent = 3;
    int order = 4;
    std::optional<double> window;
    bool as_json = false;
    std::string out_dir;
};

double auto_window(const std::string& derivative, int extent, int order) {
    // the two canonical spatially-optimized schemes use their calibration
    // windows; everything else defaults to the half-Nyquist window
    if (derivative == "second" && extent == 3 && order == 4) return kCollocatedOpt4Window;
    if (derivative == "first" && extent == 3 && order == 4) return kStaggeredOpt4Window;
    return kNyquistHalfWindow;
}

int run_optimize(const OptimizeArgs& a) {
    const bool second = a.derivative == "second";
    GridKind kind = GridKind::collocated;
    if (!a.grid.empty()) {
        if (a.grid == "collocated") kind = GridKind::collocated;
        else if (a.grid == "staggered-a") kind = GridKind::staggered_forward;
        else if (a.grid == "staggered-b") kind = GridKind::staggered_backward;
        else throw CLI::ValidationError("--grid must be collocated|staggered-a|staggered-b");
    } else if (!second) {
        kind = GridKind::staggered_forward;
    }
    if (second && kind != GridKind::collocated)
        throw CLI::ValidationError("second derivatives use the collocated grid");
    if (!second && kind == GridKind::collocated)
        throw CLI::ValidationError("first derivatives use a staggered grid");

    const int neg = kind == GridKind::collocated ? a.extent
                    : kind == GridKind::staggered_forward ? a.extent - 1
                                                          : a.extent;
    const int pos = kind == GridKind::collocated ? a.extent
                    : kind == GridKind::staggered_forward ? a.extent
                                                          : a.extent - 1;
    const int max_order = 2 * a.extent;
    const double window = a.window ? *a.window : auto_window(a.derivative, a.extent, a.order);

    Stencil st;
    double err = 0.0;
    if (a.order >= max_order) {
        st = conventional_stencil(second ? 2 : 1, kind, neg, pos);
        err = spectral_error_of(st, window);
    } else {
        StencilFamily fam = taylor_constraint_family(second ? 2 : 1, kind, neg, pos, a.order);
        OptimizeResult res = optimize_family(fam, window);
        st = res.stencil;
        err = res.error;
    }

    json j;
    j["derivative"] = second ? 2 : 1;
    j["grid_kind"] = to_string(st.grid_kind);
    j["offsets"] = st.offsets;
    j["coefficients"] = st.coefficients;
    j["accuracy_order"] = st.accuracy_order;
    j["E"] = err;
    j["window"] = window;

    if (a.as_json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "offset,coefficient\n";
        for (int k = 0; k < st.size(); ++k)
            std::cout << st.offsets[static_cast<std::size_t>(k)] << ","
                      << format17(st.coefficients[static_cast<std::size_t>(k)]) << "\n";
    }
    if (!a.out_dir.empty()) {
        Manifest man("optimize", a.out_dir);
        man.params() = {{"derivative", a.derivative}, {"grid", to_string(kind)},
                        {"extent", a.extent},         {"order", a.order},
                        {"window", window},           {"json", a.as_json}};
        fs::create_directories(a.out_dir);
        std::ofstream out(fs::path(a.out_dir) / "coefficients.json", std::ios::binary);
        out << j.dump(2) << "\n";
        man.add_output(fs::path(a.out_dir) / "coefficients.json");
        man.write();
    }
    return 0;
}

// --------------------------------------------------------------------------
// dispersion / resolution
// --------------------------------------------------------------------------

Table dispersion_table(const Stencil& st, int samples) {
    Table t;
    t.comments = {"scheme=" + st.name};
    t.columns = {"kappa", "symbol", "ideal", "misfit"};
    const DispersionCurve c = sample_curve(st, samples);
    for (std::size_t i = 0; i < c.kappa.size(); ++i) {
        const double ideal = ideal_wavenumber(st, c.kappa[i]);
        t.rows.push_back({c.kappa[i], c.symbol[i], ideal, c.symbol[i] - ideal});
    }
    return t;
}

int run_dispersion(const std::string& scheme, int samples, const std::string& out_dir) {
    const Stencil st = scheme_by_name(scheme);
    const Table t = dispersion_table(st, samples);
    if (out_dir.empty()) {
        print_table(std::cout, t);
    } else {
        Manifest man("dispersion", out_dir);
        man.params() = {{"scheme", scheme}, {"samples", samples}};
        const fs::path p = fs::path(out_dir) / "dispersion.csv";
        write_csv(p, t);
        man.add_output(p);
        man.write();
    }
    return 0;
}

int run_resolution(const std::string& scheme, double tolerance) {
    const Stencil st = scheme_by_name(scheme);
    const ResolutionLimit r = resolution_limit(st, tolerance);
    json j = {{"scheme", scheme},
              {"rel_tolerance", tolerance},
              {"kappa_max", r.kappa_max},
              {"lambda_min_dx", r.lambda_min_dx}};
    std::cout << j.dump() << "\n";
    return 0;
}

// --------------------------------------------------------------------------
// acoustic1d / sweep
// --------------------------------------------------------------------------

void add_acoustic_flags(CLI::App* cmd, Acoustic1DConfig& cfg, std::optional<double>& dt) {
    cmd->add_option("--n-cells", cfg.n_cells, "grid cells (points = n+1)");
    cmd->add_option("--scheme", cfg.scheme, "optimized4|conventional6|conventional4|conventional2");
    cmd->add_option("--length", cfg.length, "domain length [m]");
    cmd->add_option("--wavespeed", cfg.wavespeed, "wavespeed [m/s]");
    cmd->add_option("--courant", cfg.courant, "Courant number (dt = C dx / c0)");
    cmd->add_option("--dt", dt, "fixed time step [s], overrides --courant");
    cmd->add_option("--t-end", cfg.t_end, "simulation end time [s]");
    cmd->add_option("--series-terms", cfg.series_terms, "Fourier series terms");
    cmd->add_option("--amplitude", cfg.amplitude, "square-wave amplitude");
    cmd->add_option("--error-interval", cfg.error_interval, "error sampling interval [s]");
    cmd->add_flag("--parallel", cfg.parallel, "OpenMP over grid points");
}

json acoustic_params(const Acoustic1DConfig& c) {
    json j = {{"n_cells", c.n_cells},       {"scheme", c.scheme},
              {"length", c.length},         {"wavespeed", c.wavespeed},
              {"courant", c.courant},       {"t_end", c.t_end},
              {"series_terms", c.series_terms}, {"amplitude", c.amplitude},
              {"error_interval", c.error_interval}, {"parallel", c.parallel},
              {"dt", c.dt()}};
    return j;
}

int run_acoustic(Acoustic1DConfig cfg, const std::vector<double>& snapshot_times,
                 const std::string& out_dir) {
    Manifest man("acoustic1d", out_dir);
    man.params() = acoustic_params(cfg);
    man.params()["snapshot_times"] = snapshot_times;

    std::vector<FieldSample> snaps;
    const ErrorTrace trace = run_with_errors(cfg, snapshot_times, snaps);

    Table t;
    t.comments = {"scheme=" + cfg.scheme, "dx=" + format17(cfg.dx()), "dt=" + format17(cfg.dt())};
    t.columns = {"t", "error"};
    for (std::size_t i = 0; i < trace.size(); ++i) t.rows.push_back({trace.t[i], trace.value[i]});
    const fs::path errors_path = fs::path(out_dir) / "errors.csv";
    write_csv(errors_path, t);
    man.add_output(errors_path);

    for (const FieldSample& s : snaps) {
        Table st;
        st.comments = {"t=" + format17(s.t)};
        st.columns = {"x", "u_numeric", "u_analytic"};
        for (std::size_t i = 0; i < s.u.size(); ++i) {
            const double x = cfg.length * static_cast<double>(i) / cfg.n_cells;
            st.rows.push_back({x, s.u[i], s.analytic[i]});
        }
        char label[32];
        std::snprintf(label, sizeof label, "%g", s.t);
        const fs::path p = fs::path(out_dir) / ("snapshot_t" + std::string(label) + ".csv");
        write_csv(p, st);
        man.add_output(p);
    }
    man.write();
    std::cout << "final error: " << format17(trace.final_value()) << "\n";
    return 0;
}

void write_sweep_csv(const fs::path& path, const std::vector<SweepRow>& rows) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << "dx,scheme,final_error,pct_timesteps_better\n";
    for (const SweepRow& r : rows)
        out << format17(r.dx) << "," << r.scheme << "," << format17(r.final_error) << ","
            << format17(r.pct_timesteps_better) << "\n";
}

int run_sweep(Acoustic1DConfig cfg, bool fine, bool wide, std::vector<int> cells,
              const std::string& out_dir) {
    if (cells.empty()) cells = wide ? wide_sweep_cells() : fine_sweep_cells();
    (void)fine;
    Manifest man("sweep", out_dir);
    man.params() = acoustic_params(cfg);
    man.params()["n_cells_list"] = cells;

    const std::vector<SweepRow> rows = sweep(cfg, cells);
    const fs::path p = fs::path(out_dir) / "sweep.csv";
    write_sweep_csv(p, rows);
    man.add_output(p);
    man.write();
    return 0;
}

// --------------------------------------------------------------------------
// elastic2d / diff
// --------------------------------------------------------------------------

ElasticConfig parse_elastic_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("invalid config JSON " + path.string() + ": " + e.what());
    }
    ElasticConfig c;
    bool t0_given = false;
    for (const auto& [key, val] : j.items()) {
        if (key == "width") c.width = val;
        else if (key == "depth") c.depth = val;
        else if (key == "dx") c.dx = val;
        else if (key == "dz") c.dz = val;
        else if (key == "courant") c.courant = val;
        else if (key == "vmax_for_dt") c.vmax_for_dt = val;
        else if (key == "t_end") c.t_end = val;
        else if (key == "snapshot_interval") c.snapshot_interval = val;
        else if (key == "layers") {
            c.layers.clear();
            for (const auto& lj : val)
                c.layers.push_back({lj.at("thickness"), lj.at("vp"), lj.at("vs"), lj.at("rho")});
        } else if (key == "source") {
            for (const auto& [sk, sv] : val.items()) {
                if (sk == "f_peak") c.source.f_peak = sv;
                else if (sk == "t0") { c.source.t0 = sv; t0_given = true; }
                else if (sk == "amplitude") c.source.amplitude = sv;
                else if (sk == "x") c.source.x = sv;
                else if (sk == "z") c.source.z = sv;
                else throw std::runtime_error("invalid config JSON " + path.string() + ": unknown source key '" + sk + "'");
            }
        } else {
            throw std::runtime_error("invalid config JSON " + path.string() + ": unknown key '" + key + "'");
        }
    }
    if (!t0_given) c.source.t0 = 1.0 / c.source.f_peak;
    return c;
}

json elastic_params(const ElasticConfig& c, const std::string& scheme, bool serial) {
    json layers = json::array();
    for (const Layer& l : c.layers)
        layers.push_back({{"thickness", l.thickness}, {"vp", l.vp}, {"vs", l.vs}, {"rho", l.rho}});
    return {{"width", c.width},
            {"depth", c.depth},
            {"dx", c.dx},
            {"dz", c.dz},
            {"layers", layers},
            {"courant", c.courant},
            {"vmax_for_dt", c.vmax_for_dt},
            {"t_end", c.t_end},
            {"snapshot_interval", c.snapshot_interval},
            {"dt", c.dt()},
            {"source",
             {{"f_peak", c.source.f_peak},
              {"t0", c.source.t0},
              {"amplitude", c.source.amplitude},
              {"x", c.source.x},
              {"z", c.source.z}}},
            {"scheme", scheme},
            {"serial", serial}};
}

std::vector<fs::path> write_snapshot_groups(const fs::path& dir,
                                            const std::vector<SnapshotGroup>& groups) {
    std::vector<fs::path> written;
    fs::create_directories(dir);
    for (const SnapshotGroup& g : groups) {
        for (const Snapshot& s : g.fields) {
            const fs::path p = dir / (s.field + "_t" + std::to_string(g.ms_label) + ".csv");
            write_snapshot(p, s);
            written.push_back(p);
        }
    }
    return written;
}

int run_elastic(const ElasticConfig& cfg, const std::string& scheme, bool serial,
                const std::string& out_dir) {
    Manifest man("elastic2d", out_dir);
    man.params() = elastic_params(cfg, scheme, serial);
    const StencilPair pair = staggered_pair(scheme);
    const auto groups = run(cfg, pair, serial ? kernels::Exec::serial : kernels::Exec::parallel);
    for (const fs::path& p : write_snapshot_groups(out_dir, groups)) man.add_output(p);
    man.write();
    return 0;
}

int run_diff(const std::string& dir_a, const std::string& dir_b, const std::string& out_dir) {
    Manifest man("diff", out_dir);
    man.params() = {{"a", dir_a}, {"b", dir_b}};
    std::vector<fs::path> files_a;
    for (const auto& e : fs::directory_iterator(dir_a))
        if (e.path().extension() == ".csv") files_a.push_back(e.path());
    std::sort(files_a.begin(), files_a.end());
    if (files_a.empty()) throw std::runtime_error("diff: no snapshots in " + dir_a);

    json per_file = json::object();
    std::map<std::string, double> per_field;
    fs::create_directories(out_dir);
    for (const fs::path& pa : files_a) {
        const fs::path pb = fs::path(dir_b) / pa.filename();
        if (!fs::exists(pb)) throw std::runtime_error("diff: missing counterpart " + pb.string());
        const Snapshot a = read_snapshot(pa);
        const Snapshot b = read_snapshot(pb);
        const FieldDifference d = field_difference(a, b);
        const fs::path po = fs::path(out_dir) / pa.filename();
        write_snapshot(po, d.diff);
        man.add_output(po);
        per_file[pa.filename().string()] = d.max_normalized;
        auto [it, inserted] = per_field.try_emplace(a.field, d.max_normalized);
        if (!inserted) it->second = std::max(it->second, d.max_normalized);
    }
    json summary;
    summary["files"] = per_file;
    summary["per_field_max"] = per_field;
    double overall = 0.0;
    std::string largest_stress = "";
    double largest_stress_val = -1.0;
    for (const auto& [f, v] : per_field) {
        overall = std::max(overall, v);
        if ((f == "txx" || f == "tzz" || f == "txz") && v > largest_stress_val) {
            largest_stress_val = v;
            largest_stress = f;
        }
    }
    summary["max_normalized"] = overall;
    if (!largest_stress.empty()) summary["largest_stress_field"] = largest_stress;
    const fs::path sp = fs::path(out_dir) / "summary.json";
    std::ofstream out(sp, std::ios::binary);
    out << summary.dump(2) << "\n";
    man.add_output(sp);
    man.write();
    return 0;
}

// --------------------------------------------------------------------------
// figure recipes
// --------------------------------------------------------------------------

Table curve_table(const std::vector<std::string>& schemes, int samples, bool second_deriv) {
    Table t;
    t.columns = {"kappa", "ideal"};
    std::vector<Stencil> sts;
    for (const auto& s : schemes) {
        sts.push_back(scheme_by_name(s));
        t.columns.push_back(s);
    }
    for (int i = 0; i < samples; ++i) {
        const double k = std::numbers::pi * i / (samples - 1);
        std::vector<double> row = {k, second_deriv ? k * k : k};
        for (const Stencil& st : sts) row.push_back(modified_wavenumber(st, k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

int run_figure(const std::string& id, const std::string& out_dir, bool serial) {
    Manifest man("figure", out_dir);
    man.params() = {{"id", id}, {"serial", serial}};
    const fs::path dir(out_dir);
    fs::create_directories(dir);

    auto emit = [&](const std::string& name, const Table& t) {
        const fs::path p = dir / name;
        write_csv(p, t);
        man.add_output(p);
    };

    if (id == "fig1") {
        emit("fig1.csv", curve_table({"optimized4"}, 512, true));
    } else if (id == "fig2") {
        emit("fig2.csv",
             curve_table({"conventional2", "conventional4", "conventional6", "optimized4"}, 512, true));
    } else if (id == "fig8") {
        emit("fig8.csv", curve_table({"staggered-conventional6", "staggered-optimized4"}, 512, false));
    } else if (id == "fig11") {
        const Stencil opt = scheme_by_name("optimized4");
        const Stencil conv = scheme_by_name("conventional6");
        const CurveDifference d = curve_difference(opt, conv, 512);
        Table t;
        t.comments = {"integrated_misfit_optimized4=" + format17(d.integrated_misfit_a),
                      "integrated_misfit_conventional6=" + format17(d.integrated_misfit_b)};
        t.columns = {"kappa", "optimized4_misfit", "conventional6_misfit"};
        for (std::size_t i = 0; i < d.kappa.size(); ++i)
            t.rows.push_back({d.kappa[i], d.misfit_a[i], d.misfit_b[i]});
        emit("fig11.csv", t);
    } else if (id == "fig3" || id == "fig6") {
        Acoustic1DConfig cfg;
        const auto cells = (id == "fig3") ? fine_sweep_cells() : wide_sweep_cells();
        const fs::path p = dir / (id + ".csv");
        write_sweep_csv(p, sweep(cfg, cells));
        man.add_output(p);
    } else if (id == "fig4") {
        Acoustic1DConfig cfg;
        cfg.n_cells = 400;
        cfg.scheme = "optimized4";
        const ErrorTrace opt = run_with_errors(cfg);
        cfg.scheme = "conventional6";
        const ErrorTrace conv = run_with_errors(cfg);
        Table t;
        t.comments = {"dx=" + format17(cfg.dx()),
                      "pct_better_optimized=" + format17(pct_better(opt, conv))};
        t.columns = {"t", "optimized4", "conventional6"};
        for (std::size_t i = 0; i < opt.size(); ++i)
            t.rows.push_back({opt.t[i], opt.value[i], conv.value[i]});
        emit("fig4.csv", t);
    } else if (id == "fig9-16-diff" || id == "fig9..fig16-diff") {
        const ElasticConfig cfg;
        const auto exec = serial ? kernels::Exec::serial : kernels::Exec::parallel;
        const auto conv = run(cfg, staggered_pair("conventional"), exec);
        const auto opt = run(cfg, staggered_pair("optimized"), exec);
        for (const fs::path& p : write_snapshot_groups(dir / "conventional", conv)) man.add_output(p);
        for (const fs::path& p : write_snapshot_groups(dir / "optimized", opt)) man.add_output(p);
        // difference snapshots plus summary, same layout as the diff subcommand
        json per_file = json::object();
        std::map<std::string, double> per_field;
        fs::create_directories(dir / "diff");
        for (std::size_t g = 0; g < conv.size(); ++g) {
            for (std::size_t f = 0; f < conv[g].fields.size(); ++f) {
                const FieldDifference d = field_difference(conv[g].fields[f], opt[g].fields[f]);
                const std::string name =
                    conv[g].fields[f].field + "_t" + std::to_string(conv[g].ms_label) + ".csv";
                write_snapshot(dir / "diff" / name, d.diff);
                man.add_output(dir / "diff" / name);
                per_file[name] = d.max_normalized;
                auto [it, ins] = per_field.try_emplace(conv[g].fields[f].field, d.max_normalized);
                if (!ins) it->second = std::max(it->second, d.max_normalized);
            }
        }
        json summary = {{"files", per_file}, {"per_field_max", per_field}};
        double overall = 0.0;
        std::string largest_stress;
        double largest_stress_val = -1.0;
        for (const auto& [fname, v] : per_field) {
            overall = std::max(overall, v);
            if ((fname == "txx" || fname == "tzz" || fname == "txz") && v > largest_stress_val) {
                largest_stress_val = v;
                largest_stress = fname;
            }
        }
        summary["max_normalized"] = overall;
        summary["largest_stress_field"] = largest_stress;
        std::ofstream out(dir / "diff" / "summary.json", std::ios::binary);
        out << summary.dump(2) << "\n";
        man.add_output(dir / "diff" / "summary.json");
    } else {
        throw CLI::ValidationError(
            "unknown figure id (use fig1,fig2,fig3,fig4,fig6,fig8,fig11,fig9-16-diff)");
    }
    man.write();
    return 0;
}

}  // namespace

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"finite-difference stencil toolkit: spatially-optimized schemes, dispersion "
                 "analysis, and the 1D acoustic / 2D elastic validation experiments"};
    app.require_subcommand(1);

    // optimize
    OptimizeArgs oa;
    auto* opt_cmd = app.add_subcommand("optimize", "derive conventional or optimized stencil coefficients");
    opt_cmd->add_option("--derivative", oa.derivative, "second|first")
        ->check(CLI::IsMember({"second", "first"}));
    opt_cmd->add_option("--grid", oa.grid, "collocated|staggered-a|staggered-b");
    opt_cmd->add_option("--extent", oa.extent, "half extent (points each side / pair count)");
    opt_cmd->add_option("--order", oa.order, "Taylor accuracy order");
    double window_val = 0.0;
    auto* wopt = opt_cmd->add_option("--window", window_val, "integration half-window [rad]");
    opt_cmd->add_flag("--json", oa.as_json, "emit a JSON object instead of CSV");
    opt_cmd->add_option("--out-dir", oa.out_dir, "also write coefficients.json + manifest.json");

    // dispersion
    std::string disp_scheme = "optimized4";
    int disp_samples = 512;
    std::string disp_out;
    auto* disp_cmd = app.add_subcommand("dispersion", "sample a modified-wavenumber curve");
    disp_cmd->add_option("--scheme", disp_scheme, "scheme name");
    disp_cmd->add_option("--samples", disp_samples, "samples on [0, pi]");
    disp_cmd->add_option("--out-dir", disp_out, "write dispersion.csv (default: stdout)");

    // resolution
    std::string res_scheme = "optimized4";
    double res_tol = 1e-2;
    auto* res_cmd = app.add_subcommand("resolution", "resolution limit of a scheme");
    res_cmd->add_option("--scheme", res_scheme, "scheme name");
    res_cmd->add_option("--tolerance", res_tol, "relative symbol misfit tolerance");

    // acoustic1d
    Acoustic1DConfig acfg;
    std::optional<double> a_dt;
    std::vector<double> snap_times;
    std::string a_out = ".";
    auto* ac_cmd = app.add_subcommand("acoustic1d", "1D acoustic standing-wave experiment");
    add_acoustic_flags(ac_cmd, acfg, a_dt);
    ac_cmd->add_option("--snapshot-times", snap_times, "times to write snapshot_t<t>.csv");
    ac_cmd->add_option("--out-dir", a_out, "output directory");

    // sweep
    Acoustic1DConfig scfg;
    std::optional<double> s_dt;
    bool s_fine = false, s_wide = false;
    std::vector<int> s_cells;
    std::string s_out = ".";
    auto* sw_cmd = app.add_subcommand("sweep", "grid-spacing sweep over both schemes");
    add_acoustic_flags(sw_cmd, scfg, s_dt);
    sw_cmd->add_flag("--fine", s_fine, "n_cells 400..500 step 10 (default)");
    sw_cmd->add_flag("--wide", s_wide, "n_cells 250..1000 step 50");
    sw_cmd->add_option("--n-cells-list", s_cells, "explicit cell counts");
    sw_cmd->add_option("--out-dir", s_out, "output directory");

    // elastic2d
    std::string e_config, e_scheme = "optimized", e_out;
    bool e_serial = false;
    std::optional<double> e_tend, e_interval;
    auto* el_cmd = app.add_subcommand("elastic2d", "2D staggered P-SV elastic experiment");
    el_cmd->add_option("--config", e_config, "JSON config path");
    el_cmd->add_option("--scheme", e_scheme, "conventional|optimized")
        ->check(CLI::IsMember({"conventional", "optimized"}));
    el_cmd->add_option("--out-dir", e_out, "output directory")->required();
    el_cmd->add_option("--t-end", e_tend, "override end time [s]");
    el_cmd->add_option("--snapshot-interval", e_interval, "override snapshot interval [s]");
    el_cmd->add_flag("--serial", e_serial, "disable OpenMP");

    // diff
    std::string d_a, d_b, d_out;
    auto* diff_cmd = app.add_subcommand("diff", "normalized difference of two snapshot directories");
    diff_cmd->add_option("--a", d_a, "first snapshot directory")->required();
    diff_cmd->add_option("--b", d_b, "second snapshot directory")->required();
    diff_cmd->add_option("--out-dir", d_out, "output directory")->required();

    // figure
    std::string f_id, f_out = ".";
    bool f_serial = false;
    auto* fig_cmd = app.add_subcommand("figure", "canned recipe for one figure's CSV data");
    fig_cmd->add_option("id", f_id, "fig1|fig2|fig3|fig4|fig6|fig8|fig11|fig9-16-diff")->required();
    fig_cmd->add_option("--out-dir", f_out, "output directory");
    fig_cmd->add_flag("--serial", f_serial, "disable OpenMP");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (opt_cmd->parsed()) {
            if (wopt->count()) oa.window = window_val;
            return run_optimize(oa);
        }
        if (disp_cmd->parsed()) return run_dispersion(disp_scheme, disp_samples, disp_out);
        if (res_cmd->parsed()) return run_resolution(res_scheme, res_tol);
        if (ac_cmd->parsed()) {
            acfg.dt_override = a_dt;
            return run_acoustic(acfg, snap_times, a_out);
        }
        if (sw_cmd->parsed()) {
            scfg.dt_override = s_dt;
            return run_sweep(scfg, s_fine, s_wide, s_cells, s_out);
        }
        if (el_cmd->parsed()) {
            ElasticConfig cfg = e_config.empty() ? ElasticConfig{} : parse_elastic_config(e_config);
            if (e_tend) cfg.t_end = *e_tend;
            if (e_interval) cfg.snapshot_interval = *e_interval;
            return run_elastic(cfg, e_scheme, e_serial, e_out);
        }
        if (diff_cmd->parsed()) return run_diff(d_a, d_b, d_out);
        if (fig_cmd->parsed()) return run_figure(f_id, f_out, f_serial);
    } catch (const instability_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace sofd::cli
