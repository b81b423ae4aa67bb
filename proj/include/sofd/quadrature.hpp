#pragma once

#include <functional>
#include <vector>

namespace sofd {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
GaussLegendreRule gauss_legendre(int n);

/// Fixed-order Gauss-Legendre integral of f over [a, b].
double gl_integrate(const std::function<double(double)>& f, double a, double b, int order);

/// Gauss-Legendre integration with automatic order doubling until the result
/// is stable to 1e-12 relative (or `max_order` is reached).
double integrate(const std::function<double(double)>& f, double a, double b,
                 int start_order = 16, int max_order = 4096);

}  // namespace sofd
