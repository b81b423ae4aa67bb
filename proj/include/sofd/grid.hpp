#pragma once

#include <vector>

namespace sofd {

/// Dense 2D array, z-major: entry (i, j) = v[j * nx + i] so a row of constant
/// z is contiguous (matching the snapshot file layout, z increasing downward).
struct Grid2 {
    int nx = 0, nz = 0;
    std::vector<double> v;

    Grid2() = default;
    Grid2(int nx_, int nz_) : nx(nx_), nz(nz_), v(static_cast<std::size_t>(nx_) * nz_, 0.0) {}

    double& at(int i, int j) { return v[static_cast<std::size_t>(j) * nx + i]; }
    double at(int i, int j) const { return v[static_cast<std::size_t>(j) * nx + i]; }

    /// Zero-extended read: out-of-range indices return 0.
    double at0(int i, int j) const {
        if (static_cast<unsigned>(i) >= static_cast<unsigned>(nx) ||
            static_cast<unsigned>(j) >= static_cast<unsigned>(nz))
            return 0.0;
        return v[static_cast<std::size_t>(j) * nx + i];
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : v) {
            const double a = x < 0 ? -x : x;
            if (a > m) m = a;
        }
        return m;
    }

    bool all_finite() const;
};

}  // namespace sofd
