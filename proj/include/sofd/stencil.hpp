#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sofd {

/// Lattice the stencil samples live on, relative to the evaluation point.
/// staggered_forward ("type A") evaluates the derivative half a spacing in the
/// positive direction from the anchor node; staggered_backward ("type B") half
/// a spacing in the negative direction. Sample positions are the stored
/// integer offsets shifted by -1/2 (forward) or +1/2 (backward).
enum class GridKind { collocated, staggered_forward, staggered_backward };

const char* to_string(GridKind k);

/// Exact fraction with 64-bit terms. Throws on overflow; family derivation
/// for the extents used here stays far below the limit.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_zero() const { return num == 0; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

/// A finite-difference derivative approximation:
///   d^p u / dx^p  ~=  (1/dx^p) * sum_j a_j u(x_eval + offset_j * dx)
struct Stencil {
    std::vector<int> offsets;            // node-index offsets, strictly increasing
    std::vector<double> coefficients;    // one weight per offset
    int derivative_order = 2;
    GridKind grid_kind = GridKind::collocated;
    int dx_power = 2;                    // equals derivative_order
    int accuracy_order = 0;
    std::string name;

    int size() const { return static_cast<int>(offsets.size()); }

    /// Physical sample offset of entry k in grid spacings (half-integer for
    /// staggered kinds).
    double sample_offset(int k) const;

    /// For symmetric collocated stencils: coefficients at offsets 0..R.
    /// Throws if the stencil is not collocated-symmetric.
    std::vector<double> central_half_coefficients() const;

    /// For staggered stencils: weights c_k at physical offsets +(k+1/2),
    /// k = 0..H-1; the weight at -(k+1/2) is -c_k. Throws if the
    /// antisymmetry of the type-A/B patterns is violated beyond 1e-12.
    std::vector<double> staggered_half_coefficients() const;

    /// Validates the type invariants (ordering, symmetry/antisymmetry,
    /// zero-sum consistency). Throws std::invalid_argument on violation.
    void validate() const;
};

/// Affine family of Taylor-constrained coefficient vectors:
///   coefficients(params) = shift + basis * params.
/// Exact rationals are kept whenever the extent is at most 9 points.
struct StencilFamily {
    std::vector<std::string> free_parameter_names;
    std::vector<int> offsets;
    int neg_extent = 0;  // N
    int pos_extent = 0;  // M
    int derivative_order = 2;
    GridKind grid_kind = GridKind::collocated;
    int accuracy_order = 0;
    int max_accuracy_order = 0;

    std::vector<double> shift;               // size n_offsets
    std::vector<std::vector<double>> basis;  // n_offsets rows x n_params cols
    bool exact = false;                      // rational maps populated
    std::vector<Rational> shift_rat;
    std::vector<std::vector<Rational>> basis_rat;

    int n_params() const { return static_cast<int>(free_parameter_names.size()); }

    std::vector<double> coefficients(const std::vector<double>& params) const;
    Stencil member(const std::vector<double>& params) const;
};

/// Maximal-accuracy Taylor stencil for the given extent.
/// Collocated second derivatives require N == M; staggered first derivatives
/// require M == N+1 (type A) or N == M+1 (type B).
Stencil conventional_stencil(int derivative_order, GridKind kind, int neg_extent, int pos_extent);

/// Convenience for symmetric collocated second derivatives of order 2R.
Stencil conventional_collocated_second(int half_extent);

/// Taylor-constrained affine family with accuracy_order strictly below the
/// maximal order for the extent. Free parameters are the innermost
/// positive-side coefficients (a_1, a_2, ...).
StencilFamily taylor_constraint_family(int derivative_order, GridKind kind, int neg_extent,
                                       int pos_extent, int accuracy_order);

/// Integrated squared misfit between the stencil symbol and the ideal symbol
/// over [-window, window]:
///   second derivative: integrand (k^2 - symbol)^2 with symbol = -(sum a_j e^{ijk})
///   staggered first derivative: (k - symbol)^2 with symbol -> k as k -> 0.
/// Gauss-Legendre quadrature, order doubled until stable to 1e-12 relative.
inline constexpr double kNyquistHalfWindow = 1.5707963267948966;  // pi/2

double spectral_error(const StencilFamily& family, const std::vector<double>& params,
                      double window = kNyquistHalfWindow);
double spectral_error_of(const Stencil& st, double window = kNyquistHalfWindow);

struct OptimizeResult {
    Stencil stencil;
    std::vector<double> params;
    double error = 0.0;  // E at the optimum for the given window
};

/// Minimizes the spectral error over the family. E is a positive-definite
/// quadratic in the free parameters, so the normal equations are solved
/// exactly; the result is checked for stationarity with a central
/// finite-difference gradient (< 1e-8 * (1 + E)).
OptimizeResult optimize_family(const StencilFamily& family, double window);

// Canonical schemes. The optimization windows for the two spatially-optimized
// schemes are calibration constants: plain least squares over [-pi/2, pi/2]
// lands at a1 = 1.56938 / 1.18910, while the reference coefficient sets are
// the exact minimizers for the windows below.
inline constexpr double kCollocatedOpt4Window = 1.55843284;
inline constexpr double kStaggeredOpt4Window = 1.56719757;

Stencil optimized_collocated4();             // second derivative, N=M=3, order 4
Stencil optimized_staggered4(GridKind kind); // first derivative, 6 points, order 4
Stencil conventional_staggered6(GridKind kind);

/// Named scheme lookup used by the CLI and the solvers: optimized4,
/// conventional6, conventional4, conventional2, staggered-optimized4,
/// staggered-conventional6 (staggered names yield the type-A member).
Stencil scheme_by_name(const std::string& name);

}  // namespace sofd
