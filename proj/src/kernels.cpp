#include "sofd/kernels.hpp"

#include <cmath>

namespace sofd {

bool Grid2::all_finite() const {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace sofd

namespace sofd::kernels {

namespace {

inline double u0(std::span<const double> u, long i) {
    return (static_cast<unsigned long>(i) < u.size()) ? u[static_cast<std::size_t>(i)] : 0.0;
}

}  // namespace

void apply_stencil_zero_ext(std::span<const double> u, std::span<const int> offsets,
                            std::span<const double> coeff, std::span<double> out, Exec exec) {
    const long n = static_cast<long>(u.size());
    const int m = static_cast<int>(offsets.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (long i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int k = 0; k < m; ++k) acc += coeff[static_cast<std::size_t>(k)] * u0(u, i + offsets[static_cast<std::size_t>(k)]);
        out[static_cast<std::size_t>(i)] = acc;
    }
}

void acoustic_leapfrog(std::span<const double> curr, std::span<const double> prev,
                       std::span<const int> offsets, std::span<const double> coeff, double lam2,
                       std::span<double> next, Exec exec) {
    const long n = static_cast<long>(curr.size());
    const int m = static_cast<int>(offsets.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (long i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int k = 0; k < m; ++k) acc += coeff[static_cast<std::size_t>(k)] * u0(curr, i + offsets[static_cast<std::size_t>(k)]);
        next[static_cast<std::size_t>(i)] = 2.0 * curr[static_cast<std::size_t>(i)] - prev[static_cast<std::size_t>(i)] + lam2 * acc;
    }
}

void update_velocities(Grid2& vx, Grid2& vz, const Grid2& txx, const Grid2& tzz, const Grid2& txz,
                       const Grid2& bx, const Grid2& bz, std::span<const double> c, double dt_dx,
                       double dt_dz, Exec exec) {
    const int h = static_cast<int>(c.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int j = 0; j < vx.nz; ++j) {
        for (int i = 0; i < vx.nx; ++i) {
            double dtxx = 0.0, dtxz = 0.0;
            for (int k = 0; k < h; ++k) {
                dtxx += c[static_cast<std::size_t>(k)] * (txx.at0(i + 1 + k, j) - txx.at0(i - k, j));
                dtxz += c[static_cast<std::size_t>(k)] * (txz.at0(i, j + k) - txz.at0(i, j - 1 - k));
            }
            vx.at(i, j) += bx.at(i, j) * (dt_dx * dtxx + dt_dz * dtxz);
        }
    }
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int j = 0; j < vz.nz; ++j) {
        for (int i = 0; i < vz.nx; ++i) {
            double dtxz = 0.0, dtzz = 0.0;
            for (int k = 0; k < h; ++k) {
                dtxz += c[static_cast<std::size_t>(k)] * (txz.at0(i + k, j) - txz.at0(i - 1 - k, j));
                dtzz += c[static_cast<std::size_t>(k)] * (tzz.at0(i, j + 1 + k) - tzz.at0(i, j - k));
            }
            vz.at(i, j) += bz.at(i, j) * (dt_dx * dtxz + dt_dz * dtzz);
        }
    }
}

void update_stresses(Grid2& txx, Grid2& tzz, Grid2& txz, const Grid2& vx, const Grid2& vz,
                     const Grid2& lam, const Grid2& mu, const Grid2& muh, std::span<const double> c,
                     double dt_dx, double dt_dz, Exec exec) {
    const int h = static_cast<int>(c.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int j = 0; j < txx.nz; ++j) {
        for (int i = 0; i < txx.nx; ++i) {
            double dvx = 0.0, dvz = 0.0;
            for (int k = 0; k < h; ++k) {
                dvx += c[static_cast<std::size_t>(k)] * (vx.at0(i + k, j) - vx.at0(i - 1 - k, j));
                dvz += c[static_cast<std::size_t>(k)] * (vz.at0(i, j + k) - vz.at0(i, j - 1 - k));
            }
            const double lp2m = lam.at(i, j) + 2.0 * mu.at(i, j);
            txx.at(i, j) += lp2m * (dt_dx * dvx) + lam.at(i, j) * (dt_dz * dvz);
            tzz.at(i, j) += lp2m * (dt_dz * dvz) + lam.at(i, j) * (dt_dx * dvx);
        }
    }
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int j = 0; j < txz.nz; ++j) {
        for (int i = 0; i < txz.nx; ++i) {
            double dvxz = 0.0, dvzx = 0.0;
            for (int k = 0; k < h; ++k) {
                dvxz += c[static_cast<std::size_t>(k)] * (vx.at0(i, j + 1 + k) - vx.at0(i, j - k));
                dvzx += c[static_cast<std::size_t>(k)] * (vz.at0(i + 1 + k, j) - vz.at0(i - k, j));
            }
            txz.at(i, j) += muh.at(i, j) * (dt_dz * dvxz + dt_dx * dvzx);
        }
    }
}

}  // namespace sofd::kernels

namespace sofd::ref {

namespace {

inline double u0(std::span<const double> u, long i) {
    return (static_cast<unsigned long>(i) < u.size()) ? u[static_cast<std::size_t>(i)] : 0.0;
}

}  // namespace

void apply_stencil_zero_ext(std::span<const double> u, std::span<const int> offsets,
                            std::span<const double> coeff, std::span<double> out) {
    for (long i = 0; i < static_cast<long>(u.size()); ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < offsets.size(); ++k) acc += coeff[k] * u0(u, i + offsets[k]);
        out[static_cast<std::size_t>(i)] = acc;
    }
}

void acoustic_leapfrog(std::span<const double> curr, std::span<const double> prev,
                       std::span<const int> offsets, std::span<const double> coeff, double lam2,
                       std::span<double> next) {
    for (long i = 0; i < static_cast<long>(curr.size()); ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < offsets.size(); ++k) acc += coeff[k] * u0(curr, i + offsets[k]);
        next[static_cast<std::size_t>(i)] = 2.0 * curr[static_cast<std::size_t>(i)] - prev[static_cast<std::size_t>(i)] + lam2 * acc;
    }
}

void update_velocities(Grid2& vx, Grid2& vz, const Grid2& txx, const Grid2& tzz, const Grid2& txz,
                       const Grid2& bx, const Grid2& bz, std::span<const double> c, double dt_dx,
                       double dt_dz) {
    for (int j = 0; j < vx.nz; ++j)
        for (int i = 0; i < vx.nx; ++i) {
            double dtxx = 0.0, dtxz = 0.0;
            for (std::size_t k = 0; k < c.size(); ++k) {
                const int kk = static_cast<int>(k);
                dtxx += c[k] * (txx.at0(i + 1 + kk, j) - txx.at0(i - kk, j));
                dtxz += c[k] * (txz.at0(i, j + kk) - txz.at0(i, j - 1 - kk));
            }
            vx.at(i, j) += bx.at(i, j) * (dt_dx * dtxx + dt_dz * dtxz);
        }
    for (int j = 0; j < vz.nz; ++j)
        for (int i = 0; i < vz.nx; ++i) {
            double dtxz = 0.0, dtzz = 0.0;
            for (std::size_t k = 0; k < c.size(); ++k) {
                const int kk = static_cast<int>(k);
                dtxz += c[k] * (txz.at0(i + kk, j) - txz.at0(i - 1 - kk, j));
                dtzz += c[k] * (tzz.at0(i, j + 1 + kk) - tzz.at0(i, j - kk));
            }
            vz.at(i, j) += bz.at(i, j) * (dt_dx * dtxz + dt_dz * dtzz);
        }
}

void update_stresses(Grid2& txx, Grid2& tzz, Grid2& txz, const Grid2& vx, const Grid2& vz,
                     const Grid2& lam, const Grid2& mu, const Grid2& muh, std::span<const double> c,
                     double dt_dx, double dt_dz) {
    for (int j = 0; j < txx.nz; ++j)
        for (int i = 0; i < txx.nx; ++i) {
            double dvx = 0.0, dvz = 0.0;
            for (std::size_t k = 0; k < c.size(); ++k) {
                const int kk = static_cast<int>(k);
                dvx += c[k] * (vx.at0(i + kk, j) - vx.at0(i - 1 - kk, j));
                dvz += c[k] * (vz.at0(i, j + kk) - vz.at0(i, j - 1 - kk));
            }
            const double lp2m = lam.at(i, j) + 2.0 * mu.at(i, j);
            txx.at(i, j) += lp2m * (dt_dx * dvx) + lam.at(i, j) * (dt_dz * dvz);
            tzz.at(i, j) += lp2m * (dt_dz * dvz) + lam.at(i, j) * (dt_dx * dvx);
        }
    for (int j = 0; j < txz.nz; ++j)
        for (int i = 0; i < txz.nx; ++i) {
            double dvxz = 0.0, dvzx = 0.0;
            for (std::size_t k = 0; k < c.size(); ++k) {
                const int kk = static_cast<int>(k);
                dvxz += c[k] * (vx.at0(i, j + 1 + kk) - vx.at0(i, j - kk));
                dvzx += c[k] * (vz.at0(i + 1 + kk, j) - vz.at0(i - kk, j));
            }
            txz.at(i, j) += muh.at(i, j) * (dt_dz * dvxz + dt_dx * dvzx);
        }
}

}  // namespace sofd::ref
