#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sofd/grid.hpp"

namespace sofd {

/// Shortest exact decimal form of a double (17 significant digits).
std::string format17(double x);

/// Numeric table with '#'-prefixed comment lines and one column-name line.
/// Comma separator, '.' decimal point, LF line endings.
struct Table {
    std::vector<std::string> comments;       // without the leading "# "
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;   // each row matches columns.size()
};

void write_csv(const std::filesystem::path& path, const Table& table);
Table read_csv(const std::filesystem::path& path);

/// One field of one time snapshot. File layout (bit-exact):
///   # nx=<>,nz=<>,dx=<>,dz=<>,t=<>,field=<>
///   nz rows of nx comma-separated values (row = constant z, z increasing
///   downward, x increasing across the row)
struct Snapshot {
    std::string field;
    int nx = 0, nz = 0;
    double dx = 0.0, dz = 0.0;
    double t = 0.0;
    Grid2 data;
};

void write_snapshot(const std::filesystem::path& path, const Snapshot& s);
Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace sofd
