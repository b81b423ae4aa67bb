#include "sofd/dispersion.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "sofd/quadrature.hpp"

namespace sofd {

double modified_wavenumber(const Stencil& st, double kappa) {
    std::complex<double> z = 0.0;
    for (int k = 0; k < st.size(); ++k) {
        const double off = st.sample_offset(k);
        z += st.coefficients[static_cast<std::size_t>(k)] *
             std::exp(std::complex<double>(0.0, off * kappa));
    }
    const double scale = std::max(1.0, std::abs(z));
    if (st.derivative_order == 2) {
        if (std::abs(z.imag()) > 1e-12 * scale)
            throw std::runtime_error("modified_wavenumber: symbol has imaginary residue");
        return -z.real();
    }
    if (std::abs(z.real()) > 1e-12 * scale)
        throw std::runtime_error("modified_wavenumber: symbol has real residue");
    return z.imag();
}

double ideal_wavenumber(const Stencil& st, double kappa) {
    return st.derivative_order == 2 ? kappa * kappa : kappa;
}

DispersionCurve sample_curve(const Stencil& st, int samples) {
    if (samples < 2) throw std::invalid_argument("sample_curve: need at least 2 samples");
    DispersionCurve c;
    c.stencil_id = st.name;
    c.kappa.resize(static_cast<std::size_t>(samples));
    c.symbol.resize(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double k = std::numbers::pi * i / (samples - 1);
        c.kappa[static_cast<std::size_t>(i)] = k;
        c.symbol[static_cast<std::size_t>(i)] = modified_wavenumber(st, k);
    }
    return c;
}

ResolutionLimit resolution_limit(const Stencil& st, double rel_tolerance) {
    if (!(rel_tolerance > 0)) throw std::invalid_argument("resolution_limit: tolerance must be positive");
    auto rel_misfit = [&](double k) {
        return std::abs(modified_wavenumber(st, k) - ideal_wavenumber(st, k)) /
               std::abs(ideal_wavenumber(st, k));
    };
    const int n = 8192;
    const double kmin = 1e-4;
    if (rel_misfit(kmin) > rel_tolerance)
        throw std::runtime_error("resolution_limit: misfit exceeds tolerance as kappa -> 0");
    double prev = kmin;
    double crossing = -1.0;
    for (int i = 1; i <= n; ++i) {
        const double k = kmin + (std::numbers::pi - kmin) * i / n;
        if (rel_misfit(k) > rel_tolerance) {
            double lo = prev, hi = k;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                (rel_misfit(mid) > rel_tolerance ? hi : lo) = mid;
            }
            crossing = 0.5 * (lo + hi);
            break;
        }
        prev = k;
    }
    ResolutionLimit out;
    out.kappa_max = crossing < 0 ? std::numbers::pi : crossing;
    out.lambda_min_dx = 2.0 * std::numbers::pi / out.kappa_max;
    return out;
}

CurveDifference curve_difference(const Stencil& a, const Stencil& b, int samples) {
    if (a.derivative_order != b.derivative_order || a.grid_kind != b.grid_kind)
        throw std::invalid_argument("curve_difference: stencils have mismatched kinds");
    CurveDifference d;
    d.kappa.resize(static_cast<std::size_t>(samples));
    d.misfit_a.resize(static_cast<std::size_t>(samples));
    d.misfit_b.resize(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double k = std::numbers::pi * i / (samples - 1);
        d.kappa[static_cast<std::size_t>(i)] = k;
        d.misfit_a[static_cast<std::size_t>(i)] = modified_wavenumber(a, k) - ideal_wavenumber(a, k);
        d.misfit_b[static_cast<std::size_t>(i)] = modified_wavenumber(b, k) - ideal_wavenumber(b, k);
    }
    auto sq = [](double x) { return x * x; };
    d.integrated_misfit_a = integrate(
        [&](double k) { return sq(modified_wavenumber(a, k) - ideal_wavenumber(a, k)); }, 0.0,
        std::numbers::pi / 2);
    d.integrated_misfit_b = integrate(
        [&](double k) { return sq(modified_wavenumber(b, k) - ideal_wavenumber(b, k)); }, 0.0,
        std::numbers::pi / 2);
    return d;
}

}  // namespace sofd
