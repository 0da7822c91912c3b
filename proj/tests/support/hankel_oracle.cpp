#include "hankel_oracle.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

using stagnys::dd::Real;
using stagnys::dd::Complex;

namespace {

struct GaussRule {
    std::vector<Real> x, w; // nodes/weights on [-1, 1]
};

// Gauss-Legendre rule computed from scratch: Newton iteration on P_n with the
// three-term recurrence carried in double-double.
GaussRule build_rule(int n) {
    GaussRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    for (int k = 0; k < (n + 1) / 2; ++k) {
        Real x(std::cos(M_PI * (k + 0.75) / (n + 0.5)));
        Real dp;
        for (int iter = 0; iter < 6; ++iter) {
            Real p0(1.0), p1 = x;
            for (int j = 2; j <= n; ++j) {
                Real p2 = (Real(2.0 * j - 1.0) * x * p1 - Real(j - 1.0) * p0) / Real(double(j));
                p0 = p1;
                p1 = p2;
            }
            dp = Real(double(n)) * (x * p1 - p0) / (x * x - Real(1.0));
            x = x - p1 / dp;
        }
        Real w = Real(2.0) / ((Real(1.0) - x * x) * dp * dp);
        rule.x[k] = -x; // ascending order
        rule.w[k] = w;
        rule.x[n - 1 - k] = x;
        rule.w[n - 1 - k] = w;
    }
    return rule;
}

const GaussRule& rule32() {
    static const GaussRule r = build_rule(32);
    return r;
}

} // namespace

Complex hankel1_dd(int nu, double x) {
    if (!(x > 0.0)) throw std::domain_error("hankel oracle: x must be positive");
    if (nu != 0 && nu != 1) throw std::domain_error("hankel oracle: order must be 0 or 1");

    const GaussRule& gl = rule32();
    const Real inv2x = Real(1.0) / Real(2.0 * x);

    // graded panel edges: geometric near 0 (to resolve the sqrt(2x) scale of
    // the loop factor), then unit steps out to v = 9 (e^{-81} ~ 6e-36)
    std::vector<double> edges;
    edges.push_back(0.0);
    double s = std::min(0.5, 0.25 * std::sqrt(2.0 * x));
    for (double e = s; e < 1.0; e *= 2.0) edges.push_back(e);
    for (double e = 1.0; e <= 9.0; e += 1.0) edges.push_back(e);

    Complex integral(0.0, 0.0);
    for (size_t p = 0; p + 1 < edges.size(); ++p) {
        // dd midpoint/half-length so consecutive panels tile exactly
        Real mid = (Real(edges[p]) + Real(edges[p + 1])) * Real(0.5);
        Real half = (Real(edges[p + 1]) - Real(edges[p])) * Real(0.5);
        Complex acc(0.0, 0.0);
        for (size_t j = 0; j < gl.x.size(); ++j) {
            Real v = mid + half * gl.x[j];
            Real v2 = v * v;
            Real ev = stagnys::dd::exp(-v2);
            Complex loop = stagnys::dd::sqrt(Complex(Real(1.0), v2 * inv2x));
            Complex f = (nu == 0) ? Complex(ev, Real(0.0)) / loop
                                  : (ev * v2) * loop;
            acc = acc + gl.w[j] * f;
        }
        integral = integral + half * acc;
    }

    const Real sqrt_pi = stagnys::dd::sqrt(stagnys::dd::pi());
    // I_full = 2 * integral; divide by Gamma(nu + 1/2)
    Real norm = (nu == 0) ? Real(2.0) / sqrt_pi : Real(4.0) / sqrt_pi;

    // prefactor sqrt(2/(pi x)) * exp(i (x - nu pi/2 - pi/4))
    Real amp = stagnys::dd::sqrt(Real(2.0) / (stagnys::dd::pi() * Real(x)));
    Real phase = Real(x) - Real(2.0 * nu + 1.0) * stagnys::dd::ldexp(stagnys::dd::pi(), -2);
    Real sn, cs;
    stagnys::dd::sincos(phase, sn, cs);

    Complex pref(amp * cs, amp * sn);
    return pref * (norm * integral);
}

std::complex<double> hankel1(int nu, double x) {
    Complex h = hankel1_dd(nu, x);
    return {h.re.value(), h.im.value()};
}

} // namespace oracle
