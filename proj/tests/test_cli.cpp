#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cli.hpp"
#include "sofd/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv = {"sofd"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return sofd::cli::dispatch(static_cast<int>(argv.size()), argv.data());
}

struct CaptureStdout {
    std::stringstream buf;
    std::streambuf* old;
    CaptureStdout() : old(std::cout.rdbuf(buf.rdbuf())) {}
    ~CaptureStdout() { std::cout.rdbuf(old); }
    std::string str() const { return buf.str(); }
};

fs::path fresh_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / "sofd_cli_tests" / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("optimize prints the reference coefficients") {
    CaptureStdout cap;
    const int rc = run_cli({"optimize", "--derivative", "second", "--extent", "3", "--order", "4"});
    CHECK(rc == 0);
    std::istringstream in(cap.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "offset,coefficient");
    double a0 = 0, a1 = 0;
    std::string line;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        const int off = std::stoi(line.substr(0, comma));
        const double v = std::stod(line.substr(comma + 1));
        if (off == 0) a0 = v;
        if (off == 1) a1 = v;
    }
    CHECK(a0 == doctest::Approx(-2.81299833).epsilon(1e-6));
    CHECK(a1 == doctest::Approx(1.56808208).epsilon(1e-6));
}

TEST_CASE("optimize --json --out-dir writes coefficients and a manifest") {
    const fs::path dir = fresh_dir("opt");
    CaptureStdout cap;
    const int rc = run_cli({"optimize", "--derivative", "first", "--extent", "3", "--order", "4",
                            "--json", "--out-dir", dir.string()});
    CHECK(rc == 0);
    const json out = json::parse(cap.str());
    CHECK(out["derivative"] == 1);
    CHECK(out["grid_kind"] == "staggered_forward");
    CHECK(out["accuracy_order"] == 4);
    CHECK(out["coefficients"].size() == 6);
    CHECK(out.contains("E"));

    const json fromfile = json::parse(slurp(dir / "coefficients.json"));
    CHECK(fromfile["coefficients"] == out["coefficients"]);
    const json man = json::parse(slurp(dir / "manifest.json"));
    CHECK(man["subcommand"] == "optimize");
    CHECK(man["parameters"]["order"] == 4);
    CHECK(man["parameters"].contains("window"));
    CHECK(man["artifact_version"] == "0.1.0");
}

TEST_CASE("resolution emits a one-line JSON result") {
    CaptureStdout cap;
    const int rc = run_cli({"resolution", "--scheme", "conventional4", "--tolerance", "0.01"});
    CHECK(rc == 0);
    const std::string s = cap.str();
    CHECK(std::count(s.begin(), s.end(), '\n') == 1);
    const json j = json::parse(s);
    CHECK(j["scheme"] == "conventional4");
    CHECK(double(j["lambda_min_dx"]) == doctest::Approx(6.31).epsilon(0.05));
}

TEST_CASE("dispersion writes kappa,symbol,ideal,misfit") {
    const fs::path dir = fresh_dir("disp");
    const int rc = run_cli({"dispersion", "--scheme", "conventional2", "--samples", "65",
                            "--out-dir", dir.string()});
    CHECK(rc == 0);
    const sofd::Table t = sofd::read_csv(dir / "dispersion.csv");
    CHECK(t.columns == std::vector<std::string>{"kappa", "symbol", "ideal", "misfit"});
    CHECK(t.rows.size() == 65);
    for (const auto& row : t.rows) CHECK(row[3] == row[1] - row[2]);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli({"frobnicate"}) == 1);
    CHECK(run_cli({"figure", "fig99"}) == 1);
    CHECK(run_cli({"elastic2d"}) == 1);  // missing required --out-dir
}

TEST_CASE("numerical blowup exits with code 2") {
    const fs::path dir = fresh_dir("blowup");
    const int rc = run_cli({"acoustic1d", "--n-cells", "100", "--courant", "1.0", "--t-end", "200",
                            "--out-dir", dir.string()});
    CHECK(rc == 2);
}

TEST_CASE("acoustic1d run is reproducible byte for byte") {
    const fs::path d1 = fresh_dir("ac1"), d2 = fresh_dir("ac2");
    const std::vector<std::string> args = {"acoustic1d", "--n-cells", "80",  "--t-end", "2",
                                           "--scheme",    "conventional4"};
    {
        CaptureStdout cap;
        auto a1 = args;
        a1.insert(a1.end(), {"--snapshot-times", "1.0", "--out-dir", d1.string()});
        CHECK(run_cli(a1) == 0);
        auto a2 = args;
        a2.insert(a2.end(), {"--snapshot-times", "1.0", "--out-dir", d2.string()});
        CHECK(run_cli(a2) == 0);
    }
    CHECK(slurp(d1 / "errors.csv") == slurp(d2 / "errors.csv"));
    CHECK(slurp(d1 / "snapshot_t1.csv") == slurp(d2 / "snapshot_t1.csv"));
    CHECK(!slurp(d1 / "errors.csv").empty());

    const json man = json::parse(slurp(d1 / "manifest.json"));
    CHECK(man["parameters"]["n_cells"] == 80);
    CHECK(man["parameters"]["scheme"] == "conventional4");
    CHECK(man["outputs"].size() == 2);
}

TEST_CASE("figure recipes are deterministic") {
    const fs::path d1 = fresh_dir("fig1a"), d2 = fresh_dir("fig1b");
    CHECK(run_cli({"figure", "fig1", "--out-dir", d1.string()}) == 0);
    CHECK(run_cli({"figure", "fig1", "--out-dir", d2.string()}) == 0);
    CHECK(slurp(d1 / "fig1.csv") == slurp(d2 / "fig1.csv"));
    const sofd::Table t = sofd::read_csv(d1 / "fig1.csv");
    CHECK(t.columns == std::vector<std::string>{"kappa", "ideal", "optimized4"});
    CHECK(t.rows.size() == 512);
}

TEST_CASE("elastic2d honors a JSON config and diff closes the loop") {
    const fs::path dir = fresh_dir("elastic");
    const fs::path cfg_path = dir / "model.json";
    {
        std::ofstream out(cfg_path);
        out << R"({
  "width": 300, "depth": 300, "dx": 10, "dz": 10,
  "layers": [{"thickness": 150, "vp": 1400, "vs": 0, "rho": 1000},
             {"thickness": 150, "vp": 4000, "vs": 2400, "rho": 2600}],
  "t_end": 0.04, "snapshot_interval": 0.02,
  "source": {"x": 150, "z": 100}
})";
    }
    const fs::path out_a = dir / "a";
    CHECK(run_cli({"elastic2d", "--config", cfg_path.string(), "--scheme", "optimized",
                   "--out-dir", out_a.string()}) == 0);
    const sofd::Snapshot s = sofd::read_snapshot(out_a / "vx_t40.csv");
    CHECK(s.nx == 30);
    CHECK(s.nz == 31);
    CHECK(s.field == "vx");

    const fs::path out_d = dir / "d";
    CHECK(run_cli({"diff", "--a", out_a.string(), "--b", out_a.string(), "--out-dir",
                   out_d.string()}) == 0);
    const json summary = json::parse(slurp(out_d / "summary.json"));
    CHECK(double(summary["max_normalized"]) == 0.0);

    // malformed config -> usage error
    {
        std::ofstream out(cfg_path);
        out << R"({"nonsense_key": 1})";
    }
    CHECK(run_cli({"elastic2d", "--config", cfg_path.string(), "--scheme", "optimized",
                   "--out-dir", out_a.string()}) == 1);
}

TEST_CASE("sweep writes one row per (dx, scheme)") {
    const fs::path dir = fresh_dir("sweep");
    CHECK(run_cli({"sweep", "--n-cells-list", "60", "--n-cells-list", "80", "--t-end", "2",
                   "--out-dir", dir.string()}) == 0);
    std::istringstream in(slurp(dir / "sweep.csv"));
    std::string line;
    std::getline(in, line);
    CHECK(line == "dx,scheme,final_error,pct_timesteps_better");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 4);
}
