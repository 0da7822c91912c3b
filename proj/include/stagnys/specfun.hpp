#pragma once

#include <complex>

namespace stagnys {

// Bessel/Hankel evaluation for positive real arguments, relative accuracy
// better than 1e-13 on (0, 2000].  Throws std::domain_error for x <= 0.

std::complex<double> hankel1_0(double x); // J0(x) + i Y0(x)
std::complex<double> hankel1_1(double x); // J1(x) + i Y1(x)

double bessel_j0(double x);
double bessel_y0(double x);
double bessel_j1(double x);
double bessel_y1(double x);

namespace specfun_detail {

struct Quad {
    double j0, y0, j1, y1;
};

// The three internal branches, exposed so the tests can probe agreement in
// the overlap bands.  Validity: series (0, 20]; chebyshev [1, 20);
// asymptotic [15, inf).  The public functions dispatch at 1 and 18.
Quad eval_series(double x);
Quad eval_chebyshev(double x);
Quad eval_asymptotic(double x);

} // namespace specfun_detail

} // namespace stagnys
