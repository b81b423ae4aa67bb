#include "sofd/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sofd/common.hpp"

namespace sofd {

std::string format17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

std::vector<double> parse_row(const std::string& line, long lineno) {
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) comma = line.size();
        const std::string cell = line.substr(pos, comma - pos);
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (end == cell.c_str() || *end != '\0')
            throw parse_error("malformed numeric cell '" + cell + "'", lineno);
        row.push_back(v);
        pos = comma + 1;
        if (comma == line.size()) break;
    }
    return row;
}

std::string rstrip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace

void write_csv(const std::filesystem::path& path, const Table& table) {
    std::ofstream out = open_out(path);
    for (const auto& c : table.comments) out << "# " << c << "\n";
    if (!table.columns.empty()) {
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            out << (i ? "," : "") << table.columns[i];
        out << "\n";
    }
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format17(row[i]);
        out << "\n";
    }
}

Table read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    Table t;
    std::string line;
    long lineno = 0;
    bool have_columns = false;
    while (std::getline(in, line)) {
        ++lineno;
        line = rstrip_cr(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            t.comments.push_back(line.size() > 1 && line[1] == ' ' ? line.substr(2) : line.substr(1));
            continue;
        }
        if (!have_columns) {
            // the first non-comment line is the column-name header
            char* end = nullptr;
            std::strtod(line.c_str(), &end);
            if (end == line.c_str()) {
                std::stringstream ss(line);
                std::string col;
                while (std::getline(ss, col, ',')) t.columns.push_back(col);
                have_columns = true;
                continue;
            }
            have_columns = true;  // headerless numeric table
        }
        std::vector<double> row = parse_row(line, lineno);
        if (!t.rows.empty() && row.size() != t.rows.front().size())
            throw parse_error("ragged row: expected " + std::to_string(t.rows.front().size()) +
                                  " cells, got " + std::to_string(row.size()),
                              lineno);
        if (!t.columns.empty() && row.size() != t.columns.size())
            throw parse_error("row width does not match column header", lineno);
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_snapshot(const std::filesystem::path& path, const Snapshot& s) {
    if (s.data.nx != s.nx || s.data.nz != s.nz)
        throw std::invalid_argument("write_snapshot: data shape does not match header");
    std::ofstream out = open_out(path);
    out << "# nx=" << s.nx << ",nz=" << s.nz << ",dx=" << format17(s.dx) << ",dz=" << format17(s.dz)
        << ",t=" << format17(s.t) << ",field=" << s.field << "\n";
    for (int j = 0; j < s.nz; ++j) {
        for (int i = 0; i < s.nx; ++i) out << (i ? "," : "") << format17(s.data.at(i, j));
        out << "\n";
    }
}

Snapshot read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw parse_error("empty snapshot file", 1);
    line = rstrip_cr(line);
    if (line.rfind("# ", 0) != 0) throw parse_error("missing snapshot header", 1);

    Snapshot s;
    std::stringstream ss(line.substr(2));
    std::string kv;
    int seen = 0;
    while (std::getline(ss, kv, ',')) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos) throw parse_error("malformed header entry '" + kv + "'", 1);
        const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "nx") s.nx = std::atoi(val.c_str());
        else if (key == "nz") s.nz = std::atoi(val.c_str());
        else if (key == "dx") s.dx = std::atof(val.c_str());
        else if (key == "dz") s.dz = std::atof(val.c_str());
        else if (key == "t") s.t = std::atof(val.c_str());
        else if (key == "field") s.field = val;
        else throw parse_error("unknown header key '" + key + "'", 1);
        ++seen;
    }
    if (seen != 6 || s.nx <= 0 || s.nz <= 0)
        throw parse_error("incomplete snapshot header", 1);

    s.data = Grid2(s.nx, s.nz);
    long lineno = 1;
    for (int j = 0; j < s.nz; ++j) {
        if (!std::getline(in, line)) throw parse_error("unexpected end of file", lineno + 1);
        ++lineno;
        const std::vector<double> row = parse_row(rstrip_cr(line), lineno);
        if (static_cast<int>(row.size()) != s.nx)
            throw parse_error("row has " + std::to_string(row.size()) + " values, header says nx=" +
                                  std::to_string(s.nx),
                              lineno);
        for (int i = 0; i < s.nx; ++i) s.data.at(i, j) = row[static_cast<std::size_t>(i)];
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!rstrip_cr(line).empty()) throw parse_error("trailing data beyond nz rows", lineno);
    }
    return s;
}

}  // namespace sofd
