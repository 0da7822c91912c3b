#pragma once

#include <cmath>

// Double-double arithmetic (~31 significant digits).  Used for the one-time
// Chebyshev table construction in specfun and by the quadrature-based
// reference evaluators in the test suite.  Algorithms follow the classic
// error-free transformations (two_sum / two_prod with FMA).
//
// Not valid under -ffast-math; the build does not enable it.

namespace stagnys::dd {

struct Real {
    double hi = 0.0;
    double lo = 0.0;

    Real() = default;
    Real(double h) : hi(h) {}
    Real(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline Real quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline Real two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline Real two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline Real operator+(Real a, Real b) {
    Real s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline Real operator-(Real a) { return {-a.hi, -a.lo}; }
inline Real operator-(Real a, Real b) { return a + (-b); }

inline Real operator*(Real a, Real b) {
    Real p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline Real operator/(Real a, Real b) {
    double q1 = a.hi / b.hi;
    Real r = a - Real(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - Real(q2) * b;
    double q3 = r.hi / b.hi;
    Real q = quick_two_sum(q1, q2);
    return q + Real(q3);
}

inline Real& operator+=(Real& a, Real b) { a = a + b; return a; }
inline Real& operator-=(Real& a, Real b) { a = a - b; return a; }
inline Real& operator*=(Real& a, Real b) { a = a * b; return a; }
inline Real& operator/=(Real& a, Real b) { a = a / b; return a; }

inline bool operator<(Real a, Real b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(Real a, Real b) { return b < a; }

inline Real fabs(Real a) { return a.hi < 0.0 ? -a : a; }

inline Real sqrt(Real a) {
    if (a.hi == 0.0 && a.lo == 0.0) return {};
    double x = 1.0 / std::sqrt(a.hi);
    double ax = a.hi * x;
    Real err = a - Real(ax) * Real(ax);
    return Real(ax) + Real(err.hi * (x * 0.5));
}

// exactly representable two-double splits of the usual constants
inline Real pi()      { return {3.141592653589793116e+00, 1.224646799147353207e-16}; }
inline Real two_pi()  { return {6.283185307179586232e+00, 2.449293598294706414e-16}; }
inline Real half_pi() { return {1.570796326794896558e+00, 6.123233995736766036e-17}; }
inline Real ln2()     { return {6.931471805599452862e-01, 2.319046813846299558e-17}; }

inline Real ldexp(Real a, int n) { return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)}; }

inline Real exp(Real x) {
    if (x.hi < -709.0) return {};
    double n = std::floor(x.hi / 0.6931471805599453 + 0.5);
    Real r = x - Real(n) * ln2();
    Real sum(1.0), term(1.0);
    for (int m = 1; m <= 26; ++m) {
        term = term * r / Real(double(m));
        sum += term;
    }
    return ldexp(sum, int(n));
}

namespace detail {
// Taylor kernels for |r| <= pi/4 + rounding
inline Real sin_taylor(Real r) {
    Real r2 = r * r, term = r, sum = r;
    for (int m = 1; m <= 16; ++m) {
        term = term * r2 / Real(-double(2 * m) * double(2 * m + 1));
        sum += term;
    }
    return sum;
}
inline Real cos_taylor(Real r) {
    Real r2 = r * r, term(1.0), sum(1.0);
    for (int m = 1; m <= 16; ++m) {
        term = term * r2 / Real(-double(2 * m - 1) * double(2 * m));
        sum += term;
    }
    return sum;
}
} // namespace detail

inline void sincos(Real x, Real& s, Real& c) {
    double n = std::floor(x.hi / 6.283185307179586 + 0.5);
    Real r = x - Real(n) * two_pi();
    double q = std::floor(r.hi / 1.5707963267948966 + 0.5);
    r = r - Real(q) * half_pi();
    int k = int(q) % 4;
    if (k < 0) k += 4;
    Real sr = detail::sin_taylor(r), cr = detail::cos_taylor(r);
    switch (k) {
        case 0: s = sr;  c = cr;  break;
        case 1: s = cr;  c = -sr; break;
        case 2: s = -sr; c = -cr; break;
        default: s = -cr; c = sr; break;
    }
}

struct Complex {
    Real re, im;
    Complex() = default;
    Complex(Real r, Real i) : re(r), im(i) {}
    Complex(double r, double i = 0.0) : re(r), im(i) {}
};

inline Complex operator+(Complex a, Complex b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(Complex a, Complex b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator*(Complex a, Complex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(Real a, Complex b) { return {a * b.re, a * b.im}; }

inline Complex operator/(Complex a, Complex b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline Real abs(Complex a) { return sqrt(a.re * a.re + a.im * a.im); }

// principal branch, assumes Re(a) > 0 (only case used here)
inline Complex sqrt(Complex a) {
    Real m = abs(a);
    Real u = sqrt((m + a.re) * Real(0.5));
    Real v = a.im / (u + u);
    return {u, v};
}

} // namespace stagnys::dd
