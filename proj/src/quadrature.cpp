#include "sofd/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sofd {

GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    GaussLegendreRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev-based initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 64; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int order) {
    const GaussLegendreRule rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < order; ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * s;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int start_order, int max_order) {
    if (!(b > a)) throw std::invalid_argument("integrate: empty or inverted interval");
    double prev = gl_integrate(f, a, b, start_order);
    for (int order = 2 * start_order; order <= max_order; order *= 2) {
        double cur = gl_integrate(f, a, b, order);
        double scale = std::max({std::abs(cur), std::abs(prev), 1e-300});
        if (std::abs(cur - prev) <= 1e-12 * scale) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace sofd
