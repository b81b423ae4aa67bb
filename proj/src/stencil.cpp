#include "sofd/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sofd/quadrature.hpp"

namespace sofd {

const char* to_string(GridKind k) {
    switch (k) {
        case GridKind::collocated: return "collocated";
        case GridKind::staggered_forward: return "staggered_forward";
        case GridKind::staggered_backward: return "staggered_backward";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: multiply overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: add overflow");
    return r;
}

}  // namespace

Rational::Rational(std::int64_t n) : num(n), den(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator-() const { return Rational(-num, den); }

Rational Rational::operator+(const Rational& o) const {
    return Rational(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                    checked_mul(den, o.den));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::domain_error("Rational: division by zero");
    return Rational(checked_mul(num, o.den), checked_mul(den, o.num));
}

// ---------------------------------------------------------------------------
// Stencil
// ---------------------------------------------------------------------------

double Stencil::sample_offset(int k) const {
    const double j = offsets.at(static_cast<std::size_t>(k));
    switch (grid_kind) {
        case GridKind::collocated: return j;
        case GridKind::staggered_forward: return j - 0.5;
        case GridKind::staggered_backward: return j + 0.5;
    }
    return j;
}

std::vector<double> Stencil::central_half_coefficients() const {
    if (grid_kind != GridKind::collocated)
        throw std::invalid_argument("central_half_coefficients: stencil is not collocated");
    const int n = size();
    const int r = (n - 1) / 2;
    if (n != 2 * r + 1 || offsets.front() != -r || offsets.back() != r)
        throw std::invalid_argument("central_half_coefficients: extent is not symmetric");
    std::vector<double> h(static_cast<std::size_t>(r) + 1);
    for (int j = 0; j <= r; ++j) h[j] = coefficients[static_cast<std::size_t>(r + j)];
    return h;
}

std::vector<double> Stencil::staggered_half_coefficients() const {
    if (grid_kind == GridKind::collocated)
        throw std::invalid_argument("staggered_half_coefficients: stencil is collocated");
    const int n = size();
    if (n % 2 != 0) throw std::invalid_argument("staggered stencil must have even point count");
    const int h = n / 2;
    std::vector<double> c(static_cast<std::size_t>(h));
    for (int k = 0; k < h; ++k) {
        // entry with physical offset +(k+1/2) and its mirror at -(k+1/2)
        const int jp = (grid_kind == GridKind::staggered_forward) ? k + 1 : k;
        const int jm = (grid_kind == GridKind::staggered_forward) ? -k : -k - 1;
        const auto it_p = std::find(offsets.begin(), offsets.end(), jp);
        const auto it_m = std::find(offsets.begin(), offsets.end(), jm);
        if (it_p == offsets.end() || it_m == offsets.end())
            throw std::invalid_argument("staggered stencil offsets do not form +-(k+1/2) pairs");
        const double cp = coefficients[static_cast<std::size_t>(it_p - offsets.begin())];
        const double cm = coefficients[static_cast<std::size_t>(it_m - offsets.begin())];
        if (std::abs(cp + cm) > 1e-12)
            throw std::invalid_argument("staggered stencil violates antisymmetry");
        c[static_cast<std::size_t>(k)] = cp;
    }
    return c;
}

void Stencil::validate() const {
    if (offsets.size() != coefficients.size())
        throw std::invalid_argument("Stencil: offsets/coefficients size mismatch");
    if (offsets.empty()) throw std::invalid_argument("Stencil: empty");
    for (std::size_t i = 1; i < offsets.size(); ++i)
        if (offsets[i] <= offsets[i - 1])
            throw std::invalid_argument("Stencil: offsets not strictly increasing");
    if (dx_power != derivative_order)
        throw std::invalid_argument("Stencil: dx_power must equal derivative_order");
    double sum = 0.0;
    for (double a : coefficients) sum += a;
    if (std::abs(sum) > 1e-12) throw std::invalid_argument("Stencil: coefficients do not sum to 0");
    if (grid_kind == GridKind::collocated && derivative_order == 2 &&
        offsets.front() == -offsets.back()) {
        const int r = offsets.back();
        for (int j = 1; j <= r; ++j) {
            const auto ip = std::find(offsets.begin(), offsets.end(), j);
            const auto im = std::find(offsets.begin(), offsets.end(), -j);
            if (ip == offsets.end() || im == offsets.end()) continue;
            if (coefficients[static_cast<std::size_t>(ip - offsets.begin())] !=
                coefficients[static_cast<std::size_t>(im - offsets.begin())])
                throw std::invalid_argument("Stencil: symmetric-extent coefficients not symmetric");
        }
    }
    if (grid_kind != GridKind::collocated) staggered_half_coefficients();  // throws on violation
}

// ---------------------------------------------------------------------------
// Constraint derivation
// ---------------------------------------------------------------------------

namespace {

// Solves A x = B for a small dense system with F extra right-hand sides by
// Gaussian elimination; T is Rational (exact) or double.
template <typename T>
std::vector<std::vector<T>> solve_multi(std::vector<std::vector<T>> A,
                                        std::vector<std::vector<T>> B) {
    const int n = static_cast<int>(A.size());
    const int m = static_cast<int>(B.front().size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if constexpr (std::is_same_v<T, Rational>) {
                if (!A[r][col].is_zero()) { piv = r; break; }
            } else {
                if (piv < 0 || std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
            }
        }
        if constexpr (!std::is_same_v<T, Rational>) {
            if (piv >= 0 && A[piv][col] == 0.0) piv = -1;
        }
        if (piv < 0) throw std::runtime_error("singular moment system");
        std::swap(A[col], A[piv]);
        std::swap(B[col], B[piv]);
        for (int r = 0; r < n; ++r) {
            if (r == col || A[r][col] == T(0)) continue;
            const T f = A[r][col] / A[col][col];
            for (int c = col; c < n; ++c) A[r][c] = A[r][c] - f * A[col][c];
            for (int c = 0; c < m; ++c) B[r][c] = B[r][c] - f * B[col][c];
        }
    }
    std::vector<std::vector<T>> x(static_cast<std::size_t>(n),
                                  std::vector<T>(static_cast<std::size_t>(m)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) x[r][c] = B[r][c] / A[r][r];
    return x;
}

Rational ipow(std::int64_t base, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r = r * Rational(base);
    return r;
}

struct HalfFamily {
    // dependent half-coefficients as affine functions of the free ones
    std::vector<int> free_idx;                  // indices into half vector
    std::vector<int> dep_idx;
    std::vector<Rational> dep_shift;            // size dep
    std::vector<std::vector<Rational>> dep_basis;  // dep rows x free cols
};

// Half-coefficient constraint solve shared by the collocated (even moments of
// h_0..h_R) and staggered (odd moments of c_1..c_H) derivations.
HalfFamily solve_half_family(const std::vector<std::vector<Rational>>& rows,
                             const std::vector<Rational>& rhs, int n_unknowns, int n_free,
                             int first_free) {
    const int n_eq = static_cast<int>(rows.size());
    HalfFamily out;
    for (int k = 0; k < n_free; ++k) out.free_idx.push_back(first_free + k);
    for (int i = 0; i < n_unknowns; ++i)
        if (std::find(out.free_idx.begin(), out.free_idx.end(), i) == out.free_idx.end())
            out.dep_idx.push_back(i);
    if (static_cast<int>(out.dep_idx.size()) != n_eq)
        throw std::logic_error("constraint count mismatch");

    std::vector<std::vector<Rational>> A(static_cast<std::size_t>(n_eq),
                                         std::vector<Rational>(static_cast<std::size_t>(n_eq)));
    std::vector<std::vector<Rational>> B(
        static_cast<std::size_t>(n_eq), std::vector<Rational>(static_cast<std::size_t>(1 + n_free)));
    for (int r = 0; r < n_eq; ++r) {
        for (int c = 0; c < n_eq; ++c) A[r][c] = rows[r][static_cast<std::size_t>(out.dep_idx[c])];
        B[r][0] = rhs[static_cast<std::size_t>(r)];
        for (int f = 0; f < n_free; ++f)
            B[r][1 + f] = -rows[r][static_cast<std::size_t>(out.free_idx[f])];
    }
    const auto X = solve_multi<Rational>(A, B);
    out.dep_shift.resize(static_cast<std::size_t>(n_eq));
    out.dep_basis.assign(static_cast<std::size_t>(n_eq),
                         std::vector<Rational>(static_cast<std::size_t>(n_free)));
    for (int r = 0; r < n_eq; ++r) {
        out.dep_shift[r] = X[r][0];
        for (int f = 0; f < n_free; ++f) out.dep_basis[r][f] = X[r][1 + f];
    }
    return out;
}

}  // namespace

namespace {

StencilFamily derive_family(int derivative_order, GridKind kind, int neg_extent, int pos_extent,
                            int accuracy_order, bool allow_maximal) {
    if (accuracy_order <= 0 || accuracy_order % 2 != 0)
        throw std::invalid_argument("accuracy_order must be a positive even integer");

    StencilFamily fam;
    fam.derivative_order = derivative_order;
    fam.grid_kind = kind;
    fam.neg_extent = neg_extent;
    fam.pos_extent = pos_extent;
    fam.accuracy_order = accuracy_order;
    fam.exact = (neg_extent + pos_extent + 1) <= 9;

    if (kind == GridKind::collocated) {
        if (derivative_order != 2)
            throw std::invalid_argument("collocated families are derived for second derivatives");
        if (neg_extent != pos_extent || neg_extent < 1)
            throw std::invalid_argument("collocated second derivative requires symmetric extent N = M >= 1");
        const int R = pos_extent;
        fam.max_accuracy_order = 2 * R;
        const int n_free = (fam.max_accuracy_order - accuracy_order) / 2;
        if (accuracy_order > fam.max_accuracy_order || (!allow_maximal && n_free < 1))
            throw std::invalid_argument("no free parameters: accuracy_order >= maximal order");
        // moment rows over half coefficients h_0..h_R, even k = 0..accuracy_order
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (int k = 0; k <= accuracy_order; k += 2) {
            std::vector<Rational> row(static_cast<std::size_t>(R + 1));
            row[0] = (k == 0) ? Rational(1) : Rational(0);
            for (int j = 1; j <= R; ++j) row[static_cast<std::size_t>(j)] = Rational(2) * ipow(j, k);
            rows.push_back(std::move(row));
            rhs.push_back(k == 2 ? Rational(2) : Rational(0));
        }
        const HalfFamily hf = solve_half_family(rows, rhs, R + 1, n_free, 1);

        for (int f = 1; f <= n_free; ++f) fam.free_parameter_names.push_back("a" + std::to_string(f));
        for (int j = -R; j <= R; ++j) fam.offsets.push_back(j);
        const int n_off = 2 * R + 1;
        fam.shift_rat.assign(static_cast<std::size_t>(n_off), Rational(0));
        fam.basis_rat.assign(static_cast<std::size_t>(n_off),
                             std::vector<Rational>(static_cast<std::size_t>(n_free), Rational(0)));
        auto half_entry = [&](int h) -> std::pair<Rational, std::vector<Rational>> {
            // returns (shift, basis-row) of half-coefficient h
            std::vector<Rational> b(static_cast<std::size_t>(n_free), Rational(0));
            for (std::size_t q = 0; q < hf.free_idx.size(); ++q)
                if (hf.free_idx[q] == h) {
                    b[q] = Rational(1);
                    return {Rational(0), b};
                }
            for (std::size_t q = 0; q < hf.dep_idx.size(); ++q)
                if (hf.dep_idx[q] == h) return {hf.dep_shift[q], hf.dep_basis[q]};
            throw std::logic_error("half index not found");
        };
        for (int j = -R; j <= R; ++j) {
            const auto [sh, bs] = half_entry(std::abs(j));
            const std::size_t idx = static_cast<std::size_t>(j + R);
            fam.shift_rat[idx] = sh;
            fam.basis_rat[idx] = bs;
        }
    } else {
        if (derivative_order != 1)
            throw std::invalid_argument("staggered families are derived for first derivatives");
        const bool fwd = (kind == GridKind::staggered_forward);
        if ((fwd && pos_extent != neg_extent + 1) || (!fwd && neg_extent != pos_extent + 1))
            throw std::invalid_argument("staggered extent must satisfy M = N+1 (type A) or N = M+1 (type B)");
        const int H = std::max(neg_extent, pos_extent);
        fam.max_accuracy_order = 2 * H;
        const int n_free = (fam.max_accuracy_order - accuracy_order) / 2;
        if (accuracy_order > fam.max_accuracy_order || (!allow_maximal && n_free < 1))
            throw std::invalid_argument("no free parameters: accuracy_order >= maximal order");
        // odd moments of c_1..c_H (weight at physical +(2k-1)/2):
        //   sum_k c_k (2k-1)^p = delta_{p,1}, p = 1, 3, ..., accuracy_order-1
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (int p = 1; p <= accuracy_order - 1; p += 2) {
            std::vector<Rational> row(static_cast<std::size_t>(H));
            for (int k = 1; k <= H; ++k) row[static_cast<std::size_t>(k - 1)] = ipow(2 * k - 1, p);
            rows.push_back(std::move(row));
            rhs.push_back(p == 1 ? Rational(1) : Rational(0));
        }
        const HalfFamily hf = solve_half_family(rows, rhs, H, n_free, 0);

        for (int f = 0; f < n_free; ++f) {
            const int j = fwd ? f + 1 : f;  // index of the positive-offset coefficient
            fam.free_parameter_names.push_back("a" + std::to_string(j));
        }
        for (int j = -neg_extent; j <= pos_extent; ++j) fam.offsets.push_back(j);
        const int n_off = neg_extent + pos_extent + 1;
        fam.shift_rat.assign(static_cast<std::size_t>(n_off), Rational(0));
        fam.basis_rat.assign(static_cast<std::size_t>(n_off),
                             std::vector<Rational>(static_cast<std::size_t>(n_free), Rational(0)));
        auto half_entry = [&](int k) -> std::pair<Rational, std::vector<Rational>> {
            std::vector<Rational> b(static_cast<std::size_t>(n_free), Rational(0));
            for (std::size_t q = 0; q < hf.free_idx.size(); ++q)
                if (hf.free_idx[q] == k - 1) {
                    b[q] = Rational(1);
                    return {Rational(0), b};
                }
            for (std::size_t q = 0; q < hf.dep_idx.size(); ++q)
                if (hf.dep_idx[q] == k - 1) return {hf.dep_shift[q], hf.dep_basis[q]};
            throw std::logic_error("half index not found");
        };
        for (int j = -neg_extent; j <= pos_extent; ++j) {
            // physical offset of node j is j -+ 1/2; pair index k and sign
            const double phys = fwd ? j - 0.5 : j + 0.5;
            const int k = static_cast<int>(std::lround(std::abs(phys) + 0.5));
            const bool positive = phys > 0;
            auto [sh, bs] = half_entry(k);
            const std::size_t idx = static_cast<std::size_t>(j + neg_extent);
            if (!positive) {
                sh = -sh;
                for (auto& v : bs) v = -v;
            }
            fam.shift_rat[idx] = sh;
            fam.basis_rat[idx] = bs;
        }
    }

    const std::size_t n_off = fam.offsets.size();
    fam.shift.resize(n_off);
    fam.basis.assign(n_off, std::vector<double>(fam.free_parameter_names.size()));
    for (std::size_t i = 0; i < n_off; ++i) {
        fam.shift[i] = fam.shift_rat[i].value();
        for (std::size_t f = 0; f < fam.free_parameter_names.size(); ++f)
            fam.basis[i][f] = fam.basis_rat[i][f].value();
    }
    return fam;
}

}  // namespace

StencilFamily taylor_constraint_family(int derivative_order, GridKind kind, int neg_extent,
                                       int pos_extent, int accuracy_order) {
    return derive_family(derivative_order, kind, neg_extent, pos_extent, accuracy_order, false);
}

std::vector<double> StencilFamily::coefficients(const std::vector<double>& params) const {
    if (static_cast<int>(params.size()) != n_params())
        throw std::invalid_argument("StencilFamily: wrong parameter count");
    std::vector<double> a(shift);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t f = 0; f < params.size(); ++f) a[i] += basis[i][f] * params[f];
    return a;
}

Stencil StencilFamily::member(const std::vector<double>& params) const {
    Stencil st;
    st.offsets = offsets;
    st.coefficients = coefficients(params);
    st.derivative_order = derivative_order;
    st.grid_kind = grid_kind;
    st.dx_power = derivative_order;
    st.accuracy_order = accuracy_order;
    st.validate();
    return st;
}

Stencil conventional_stencil(int derivative_order, GridKind kind, int neg_extent, int pos_extent) {
    int max_order = 0;
    if (kind == GridKind::collocated) {
        if (derivative_order != 2 || neg_extent != pos_extent || neg_extent < 1)
            throw std::invalid_argument("conventional collocated stencils require d=2 and N = M >= 1");
        max_order = 2 * pos_extent;
    } else {
        if (derivative_order != 1)
            throw std::invalid_argument("conventional staggered stencils require d=1");
        max_order = 2 * std::max(neg_extent, pos_extent);
    }
    // a zero-free-parameter family is exactly the maximal-order Taylor solve
    StencilFamily fam = derive_family(derivative_order, kind, neg_extent, pos_extent, max_order, true);
    Stencil st = fam.member({});
    st.accuracy_order = max_order;
    return st;
}

Stencil conventional_collocated_second(int half_extent) {
    Stencil st = conventional_stencil(2, GridKind::collocated, half_extent, half_extent);
    st.name = "conventional" + std::to_string(2 * half_extent);
    return st;
}

// ---------------------------------------------------------------------------
// Spectral error and optimization
// ---------------------------------------------------------------------------

namespace {

// Real-valued symbol of a symmetric/antisymmetric coefficient vector.
double symbol_value(const std::vector<int>& offsets, const std::vector<double>& coeff,
                    GridKind kind, int derivative_order, double kappa) {
    if (derivative_order == 2) {
        double s = 0.0;
        for (std::size_t i = 0; i < offsets.size(); ++i)
            s += coeff[i] * std::cos(offsets[i] * kappa);
        return -s;
    }
    const double shiftv = (kind == GridKind::staggered_forward) ? -0.5 : 0.5;
    double s = 0.0;
    for (std::size_t i = 0; i < offsets.size(); ++i)
        s += coeff[i] * std::sin((offsets[i] + shiftv) * kappa);
    return s;
}

double ideal_symbol(int derivative_order, double kappa) {
    return derivative_order == 2 ? kappa * kappa : kappa;
}

}  // namespace

double spectral_error(const StencilFamily& family, const std::vector<double>& params,
                      double window) {
    if (!(window > 0)) throw std::invalid_argument("spectral_error: empty window");
    const std::vector<double> a = family.coefficients(params);
    auto integrand = [&](double k) {
        const double m = ideal_symbol(family.derivative_order, k) -
                         symbol_value(family.offsets, a, family.grid_kind, family.derivative_order, k);
        return m * m;
    };
    return integrate(integrand, -window, window);
}

double spectral_error_of(const Stencil& st, double window) {
    if (!(window > 0)) throw std::invalid_argument("spectral_error_of: empty window");
    auto integrand = [&](double k) {
        const double m = ideal_symbol(st.derivative_order, k) -
                         symbol_value(st.offsets, st.coefficients, st.grid_kind, st.derivative_order, k);
        return m * m;
    };
    return integrate(integrand, -window, window);
}

OptimizeResult optimize_family(const StencilFamily& family, double window) {
    if (!(window > 0)) throw std::invalid_argument("optimize_family: empty window");
    const int n = family.n_params();
    if (n == 0) throw std::invalid_argument("optimize_family: family has no free parameters");

    auto basis_symbol = [&](int f, double k) {
        std::vector<double> col(family.offsets.size());
        for (std::size_t i = 0; i < col.size(); ++i) col[i] = family.basis[i][static_cast<std::size_t>(f)];
        return symbol_value(family.offsets, col, family.grid_kind, family.derivative_order, k);
    };
    auto m0 = [&](double k) {
        return ideal_symbol(family.derivative_order, k) -
               symbol_value(family.offsets, family.shift, family.grid_kind, family.derivative_order, k);
    };

    // normal equations G p = r from quadrature moments
    std::vector<std::vector<double>> G(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n)));
    std::vector<double> r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            G[i][j] = G[j][i] =
                integrate([&](double k) { return basis_symbol(i, k) * basis_symbol(j, k); },
                          -window, window);
        }
        r[i] = integrate([&](double k) { return basis_symbol(i, k) * m0(k); }, -window, window);
    }

    // Cholesky; failure means the quadratic form is not positive definite.
    std::vector<std::vector<double>> L(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = G[i][j];
            for (int k = 0; k < j; ++k) s -= L[i][k] * L[j][k];
            if (i == j) {
                if (s <= 0.0) throw std::runtime_error("optimize_family: degenerate family (normal system not SPD)");
                L[i][i] = std::sqrt(s);
            } else {
                L[i][j] = s / L[j][j];
            }
        }
    }
    std::vector<double> y(static_cast<std::size_t>(n)), p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double s = r[i];
        for (int k = 0; k < i; ++k) s -= L[i][k] * y[k];
        y[i] = s / L[i][i];
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k < n; ++k) s -= L[k][i] * p[k];
        p[i] = s / L[i][i];
    }

    OptimizeResult res;
    res.params = p;
    res.error = spectral_error(family, p, window);
    // stationarity: central finite-difference gradient at the optimum
    for (int f = 0; f < n; ++f) {
        const double h = 1e-5 * (1.0 + std::abs(p[static_cast<std::size_t>(f)]));
        std::vector<double> pp = p, pm = p;
        pp[static_cast<std::size_t>(f)] += h;
        pm[static_cast<std::size_t>(f)] -= h;
        const double g = (spectral_error(family, pp, window) - spectral_error(family, pm, window)) / (2 * h);
        if (std::abs(g) >= 1e-8 * (1.0 + res.error))
            throw std::logic_error("optimize_family: stationarity check failed");
    }
    res.stencil = family.member(p);
    return res;
}

// ---------------------------------------------------------------------------
// Canonical schemes
// ---------------------------------------------------------------------------

Stencil optimized_collocated4() {
    StencilFamily fam = taylor_constraint_family(2, GridKind::collocated, 3, 3, 4);
    Stencil st = optimize_family(fam, kCollocatedOpt4Window).stencil;
    st.name = "optimized4";
    return st;
}

Stencil optimized_staggered4(GridKind kind) {
    const bool fwd = (kind == GridKind::staggered_forward);
    StencilFamily fam = taylor_constraint_family(1, kind, fwd ? 2 : 3, fwd ? 3 : 2, 4);
    Stencil st = optimize_family(fam, kStaggeredOpt4Window).stencil;
    st.name = fwd ? "staggered-optimized4" : "staggered-optimized4-b";
    return st;
}

Stencil conventional_staggered6(GridKind kind) {
    const bool fwd = (kind == GridKind::staggered_forward);
    Stencil st = conventional_stencil(1, kind, fwd ? 2 : 3, fwd ? 3 : 2);
    st.name = fwd ? "staggered-conventional6" : "staggered-conventional6-b";
    return st;
}

Stencil scheme_by_name(const std::string& name) {
    if (name == "optimized4") return optimized_collocated4();
    if (name == "conventional6") return conventional_collocated_second(3);
    if (name == "conventional4") return conventional_collocated_second(2);
    if (name == "conventional2") return conventional_collocated_second(1);
    if (name == "staggered-optimized4") return optimized_staggered4(GridKind::staggered_forward);
    if (name == "staggered-conventional6") return conventional_staggered6(GridKind::staggered_forward);
    throw std::invalid_argument("unknown scheme: " + name);
}

}  // namespace sofd
