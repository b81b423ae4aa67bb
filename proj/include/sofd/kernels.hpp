#pragma once

#include <span>

#include "sofd/grid.hpp"

namespace sofd::kernels {

enum class Exec { serial, parallel };

/// out[i] = sum_k coeff[k] * u[i + offsets[k]], reads outside [0, n) are zero.
void apply_stencil_zero_ext(std::span<const double> u, std::span<const int> offsets,
                            std::span<const double> coeff, std::span<double> out, Exec exec);

/// Fused leapfrog update with zero extension:
///   next[i] = 2 curr[i] - prev[i] + lam2 * sum_k coeff[k] * curr[i + offsets[k]]
void acoustic_leapfrog(std::span<const double> curr, std::span<const double> prev,
                       std::span<const int> offsets, std::span<const double> coeff, double lam2,
                       std::span<double> next, Exec exec);

/// Staggered velocity update (Virieux order, phase 1). `c` holds the H
/// antisymmetric half-offset weights; all out-of-range field reads are zero.
///   vx(i+1/2, j) += bx * (dt/dx * Dx+ txx + dt/dz * Dz- txz)
///   vz(i, j+1/2) += bz * (dt/dx * Dx- txz + dt/dz * Dz+ tzz)
void update_velocities(Grid2& vx, Grid2& vz, const Grid2& txx, const Grid2& tzz, const Grid2& txz,
                       const Grid2& bx, const Grid2& bz, std::span<const double> c, double dt_dx,
                       double dt_dz, Exec exec);

/// Staggered stress update (phase 2), using the just-updated velocities:
///   txx(i, j) += dt * ((lam+2mu) Dx- vx + lam Dz- vz)
///   tzz(i, j) += dt * ((lam+2mu) Dz- vz + lam Dx- vx)
///   txz(i+1/2, j+1/2) += dt * muh * (Dz+ vx + Dx+ vz)
void update_stresses(Grid2& txx, Grid2& tzz, Grid2& txz, const Grid2& vx, const Grid2& vz,
                     const Grid2& lam, const Grid2& mu, const Grid2& muh, std::span<const double> c,
                     double dt_dx, double dt_dz, Exec exec);

}  // namespace sofd::kernels

/// Plain serial implementations of the same updates, kept as the reference
/// the parallel kernels are tested against (results must match bit for bit).
namespace sofd::ref {

void apply_stencil_zero_ext(std::span<const double> u, std::span<const int> offsets,
                            std::span<const double> coeff, std::span<double> out);

void acoustic_leapfrog(std::span<const double> curr, std::span<const double> prev,
                       std::span<const int> offsets, std::span<const double> coeff, double lam2,
                       std::span<double> next);

void update_velocities(Grid2& vx, Grid2& vz, const Grid2& txx, const Grid2& tzz, const Grid2& txz,
                       const Grid2& bx, const Grid2& bz, std::span<const double> c, double dt_dx,
                       double dt_dz);

void update_stresses(Grid2& txx, Grid2& tzz, Grid2& txz, const Grid2& vx, const Grid2& vz,
                     const Grid2& lam, const Grid2& mu, const Grid2& muh, std::span<const double> c,
                     double dt_dx, double dt_dz);

}  // namespace sofd::ref
