#include "stagnys/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "stagnys/specfun.hpp"

namespace stagnys {

namespace {

double separation(const Vec2& a, const Vec2& b) {
    const double r = (a - b).norm();
    const double scale = a.norm() + b.norm() + 1.0;
    if (r <= 1e-12 * scale)
        throw std::domain_error("kernel evaluated at coincident points");
    return r;
}

} // namespace

namespace kernel_core {

cplx v1(double k, const Vec2& xp, const Vec2& xq) {
    const double r = separation(xp, xq);
    const cplx h = hankel1_0(k * r);
    return cplx(0.0, 0.25) * h;
}

cplx v2(double k, const Vec2& xp, const Vec2& np, const Vec2& xq, const Vec2& nq) {
    const double r = separation(xp, xq);
    const cplx h = hankel1_0(k * r);
    return cplx(0.0, -0.25 * k * k) * h * np.dot(nq);
}

cplx dlp(double k, const Vec2& z, const Vec2& xq, const Vec2& nq) {
    const double r = separation(z, xq);
    const cplx h = hankel1_1(k * r);
    return cplx(0.0, 0.25 * k) * h * ((z - xq).dot(nq) / r);
}

cplx adjoint_dlp(double k, const Vec2& xp, const Vec2& np, const Vec2& xq) {
    const double r = separation(xp, xq);
    const cplx h = hankel1_1(k * r);
    return cplx(0.0, 0.25 * k) * h * ((xp - xq).dot(np) / r);
}

} // namespace kernel_core

cplx v1(const ParametricCurve& p, const ParametricCurve& q, double s, double t, double k) {
    return kernel_core::v1(k, p.position(s), q.position(t));
}

cplx v2(const ParametricCurve& p, const ParametricCurve& q, double s, double t, double k) {
    return kernel_core::v2(k, p.position(s), p.scaled_normal(s),
                           q.position(t), q.scaled_normal(t));
}

cplx dlp_kernel(const Vec2& z, const ParametricCurve& q, double t, double k) {
    return kernel_core::dlp(k, z, q.position(t), q.scaled_normal(t));
}

cplx adjoint_dlp_kernel(const ParametricCurve& p, double s,
                        const ParametricCurve& q, double t, double k) {
    return kernel_core::adjoint_dlp(k, p.position(s), p.scaled_normal(s), q.position(t));
}

cplx point_source(const Vec2& z, const Vec2& z0, double k) {
    const double r = separation(z, z0);
    return hankel1_0(k * r);
}

cplx point_source_neumann(const ParametricCurve& p, double t, const Vec2& z0, double k) {
    const Vec2 x = p.position(t);
    const double r = separation(x, z0);
    // grad H0(k|x - z0|) = -k H1(k r) (x - z0)/r
    return -k * hankel1_1(k * r) * ((x - z0).dot(p.scaled_normal(t)) / r);
}

} // namespace stagnys
