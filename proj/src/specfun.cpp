#include "stagnys/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "stagnys/ddreal.hpp"

// Strategy: ascending series in double-double arithmetic below x = 1 and for
// the one-time construction of per-unit-interval Chebyshev tables covering
// [1, 20); beyond x = 18 the Hankel asymptotic expansion, truncated at its
// smallest term, which is below 1e-15 there.  The expensive double-double
// path is never hit at evaluation time for x >= 1.

namespace stagnys {

namespace {

using dd::Real;

constexpr double kEulerGamma = 0.5772156649015328606;

struct QuadDD {
    Real j0, y0, j1, y1;
};

// Ascending series (power series for J, log-type series for Y) carried in
// double-double.  Valid for any x in (0, 20]; the alternating sums grow to
// ~e^x before cancelling down to O(1), which dd absorbs with ~12 digits to
// spare at x = 20.
QuadDD series_dd(double x) {
    const Real q = Real(x) * Real(x) * Real(0.25);
    Real tj0(1.0), sj0(1.0);       // J0 terms
    Real s0;                        // sum H_m terms for Y0
    Real tj1(1.0), sj1(1.0);       // J1 terms (without x/2 factor)
    Real s1(1.0);                   // sum (H_m + H_{m+1}) terms, m=0 term = 1
    Real harmonic;                  // H_m
    for (int m = 1; m <= 120; ++m) {
        const Real md{double(m)};
        harmonic += Real(1.0) / md;
        tj0 = -tj0 * q / (md * md);
        sj0 += tj0;
        s0 -= tj0 * harmonic;
        tj1 = -tj1 * q / (md * Real(double(m + 1)));
        sj1 += tj1;
        s1 += tj1 * (harmonic + harmonic + Real(1.0) / Real(double(m + 1)));
        if (std::fabs(tj0.hi) < 1e-45 && std::fabs(tj1.hi) < 1e-45) break;
    }
    const Real two_over_pi = Real(2.0) / dd::pi();
    const Real lg = Real(std::log(0.5 * x)) + Real(kEulerGamma);
    QuadDD r;
    r.j0 = sj0;
    r.y0 = two_over_pi * (lg * sj0 + s0);
    r.j1 = Real(0.5 * x) * sj1;
    r.y1 = two_over_pi * lg * r.j1 - two_over_pi / Real(x)
         - Real(x) / (Real(2.0) * dd::pi()) * s1;
    return r;
}

struct ChebTable {
    static constexpr int kDegree = 32;
    static constexpr int kIntervals = 19; // [1,2), [2,3), ..., [19,20)
    // coefficients [interval][function][k], functions ordered j0,y0,j1,y1
    std::array<std::array<std::array<double, kDegree>, 4>, kIntervals> c{};

    ChebTable() {
        for (int iv = 0; iv < kIntervals; ++iv) {
            const double a = 1.0 + iv, b = 2.0 + iv;
            std::array<QuadDD, kDegree> f;
            for (int j = 0; j < kDegree; ++j) {
                const double xj = 0.5 * (a + b)
                                + 0.5 * (b - a) * std::cos(M_PI * (j + 0.5) / kDegree);
                f[j] = series_dd(xj);
            }
            for (int k = 0; k < kDegree; ++k) {
                Real acc[4];
                for (int j = 0; j < kDegree; ++j) {
                    const double w = std::cos(M_PI * k * (j + 0.5) / kDegree);
                    acc[0] += f[j].j0 * Real(w);
                    acc[1] += f[j].y0 * Real(w);
                    acc[2] += f[j].j1 * Real(w);
                    acc[3] += f[j].y1 * Real(w);
                }
                for (int fn = 0; fn < 4; ++fn)
                    c[iv][fn][k] = (Real(2.0 / kDegree) * acc[fn]).value();
            }
        }
    }
};

const ChebTable& cheb_table() {
    static const ChebTable t;
    return t;
}

double clenshaw(const std::array<double, ChebTable::kDegree>& c, double u) {
    double b1 = 0.0, b2 = 0.0;
    const double two_u = 2.0 * u;
    for (int k = ChebTable::kDegree - 1; k >= 1; --k) {
        const double b0 = c[k] + two_u * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return 0.5 * c[0] + u * b1 - b2;
}

} // namespace

namespace specfun_detail {

Quad eval_series(double x) {
    QuadDD r = series_dd(x);
    return {r.j0.value(), r.y0.value(), r.j1.value(), r.y1.value()};
}

Quad eval_chebyshev(double x) {
    const ChebTable& t = cheb_table();
    int iv = int(x) - 1;
    if (iv < 0) iv = 0;
    if (iv >= ChebTable::kIntervals) iv = ChebTable::kIntervals - 1;
    const double u = 2.0 * (x - (1.0 + iv)) - 1.0;
    return {clenshaw(t.c[iv][0], u), clenshaw(t.c[iv][1], u),
            clenshaw(t.c[iv][2], u), clenshaw(t.c[iv][3], u)};
}

Quad eval_asymptotic(double x) {
    using cplx = std::complex<double>;
    // S_nu(x) = sum_k i^k a_k(nu) / x^k with
    // a_{k}(nu) = a_{k-1}(nu) * (4 nu^2 - (2k-1)^2) / (8 k)
    cplx s0(1.0, 0.0), s1(1.0, 0.0);
    double t0 = 1.0, t1 = 1.0;
    double mag0 = 1.0, mag1 = 1.0;
    bool live0 = true, live1 = true;
    for (int k = 1; k <= 48 && (live0 || live1); ++k) {
        const double odd = double(2 * k - 1);
        const double denom = 8.0 * k * x;
        static constexpr cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        if (live0) {
            t0 *= -odd * odd / denom;
            if (std::fabs(t0) >= mag0) { live0 = false; } // past smallest term
            else {
                mag0 = std::fabs(t0);
                s0 += ipow[k & 3] * t0;
                if (mag0 < 1e-19) live0 = false;
            }
        }
        if (live1) {
            t1 *= (4.0 - odd * odd) / denom;
            if (std::fabs(t1) >= mag1) { live1 = false; }
            else {
                mag1 = std::fabs(t1);
                s1 += ipow[k & 3] * t1;
                if (mag1 < 1e-19) live1 = false;
            }
        }
    }
    const double amp = std::sqrt(2.0 / (M_PI * x));
    const double c = std::cos(x), s = std::sin(x);
    constexpr double inv_sqrt2 = 0.7071067811865475244;
    // e^{i(x - pi/4)} and e^{i(x - 3pi/4)}
    const cplx e0((c + s) * inv_sqrt2, (s - c) * inv_sqrt2);
    const cplx e1((s - c) * inv_sqrt2, -(s + c) * inv_sqrt2);
    const cplx h0 = amp * e0 * s0;
    const cplx h1 = amp * e1 * s1;
    return {h0.real(), h0.imag(), h1.real(), h1.imag()};
}

} // namespace specfun_detail

namespace {

specfun_detail::Quad eval(double x) {
    if (!(x > 0.0)) throw std::domain_error("hankel1: argument must be positive");
    if (x < 1.0) return specfun_detail::eval_series(x);
    if (x < 18.0) return specfun_detail::eval_chebyshev(x);
    return specfun_detail::eval_asymptotic(x);
}

} // namespace

std::complex<double> hankel1_0(double x) {
    auto q = eval(x);
    return {q.j0, q.y0};
}

std::complex<double> hankel1_1(double x) {
    auto q = eval(x);
    return {q.j1, q.y1};
}

double bessel_j0(double x) { return eval(x).j0; }
double bessel_y0(double x) { return eval(x).y0; }
double bessel_j1(double x) { return eval(x).j1; }
double bessel_y1(double x) { return eval(x).y1; }

} // namespace stagnys
