#pragma once

#include <complex>
#include "stagnys/ddreal.hpp"

// Reference evaluator for the Hankel functions H^(1)_0 and H^(1)_1 on x > 0,
// used only by the test suite.  It follows a route entirely different from
// the library implementation: Hankel's loop integral
//
//   H^(1)_nu(x) = sqrt(2/(pi x)) e^{i(x - nu pi/2 - pi/4)} / Gamma(nu+1/2)
//                 * Int_0^inf e^{-u} u^{nu-1/2} (1 + iu/(2x))^{nu-1/2} du
//
// evaluated after the substitution u = v^2 with graded-panel Gauss-Legendre
// quadrature in double-double arithmetic.  Accuracy is ~1e-25 over
// x in (0, 5000], verified internally by the Wronskian identity and against
// published table values.

namespace oracle {

stagnys::dd::Complex hankel1_dd(int nu, double x);

std::complex<double> hankel1(int nu, double x);

inline double j0(double x) { return hankel1(0, x).real(); }
inline double y0(double x) { return hankel1(0, x).imag(); }
inline double j1(double x) { return hankel1(1, x).real(); }
inline double y1(double x) { return hankel1(1, x).imag(); }

} // namespace oracle
